#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinvar/motivic.hpp"

using namespace spinvar::motivic;

TEST_CASE("strict partition counts") {
  CHECK(strict_partition_count(3, 4) == 2);   // 3, 2+1
  CHECK(strict_partition_count(0, 4) == 1);   // empty partition
  CHECK(strict_partition_count(10, 4) == 1);  // 4+3+2+1
  CHECK(strict_partition_count(11, 4) == 0);
  CHECK(strict_partition_count(5, 0) == 0);
  // generating function oracle: coefficients of prod_{j=1..4} (1+t^j)
  std::vector<mpz_class> gen{1};
  for (int j = 1; j <= 4; ++j) {
    std::vector<mpz_class> next(gen.size() + static_cast<size_t>(j), 0);
    for (size_t i = 0; i < gen.size(); ++i) {
      next[i] += gen[i];
      next[i + static_cast<size_t>(j)] += gen[i];
    }
    gen = std::move(next);
  }
  for (std::int64_t k = 0; k <= 10; ++k)
    CHECK(strict_partition_count(k, 4) == gen[static_cast<size_t>(k)]);
}

TEST_CASE("Poincare polynomial of S") {
  auto p = poincare_S();
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(3) == 2);
  CHECK(p.coefficient(10) == 1);
  CHECK(p.evaluate_at_one() == 16);
  CHECK(p.coefficient_list() == "[1,1,1,2,2,2,2,2,1,1,1]");
  // L -> t^2 doubles every degree
  auto t2 = p.substitute_t_squared();
  CHECK(t2.degree() == 20);
  CHECK(t2.coefficient(6) == 2);
  CHECK(t2.coefficient(7) == 0);
  CHECK(t2.evaluate_at_one() == p.evaluate_at_one());
}

TEST_CASE("hyperplane section classes") {
  auto [sing, reg] = hyperplane_section_classes();
  CHECK(sing.coefficient_list() == "[1,1,1,2,2,2,2,2,1,1]");
  CHECK(reg.coefficient_list() == "[1,1,1,2,2,2,2,1,1,1]");
  CHECK(sing.coefficient(7) == 2);
  CHECK(reg.coefficient(7) == 1);
  CHECK(sing - reg == MotivicPolynomial::monomial(7));
  // equal everywhere except degree 7
  for (int k = 0; k <= 9; ++k) {
    if (k == 7)
      CHECK(sing.coefficient(k) - reg.coefficient(k) == 1);
    else
      CHECK(sing.coefficient(k) == reg.coefficient(k));
  }
  // Euler characteristics: evaluation at L = 1 matches t = 1 under L -> t^2
  for (const auto& cls : {poincare_S(), sing, reg})
    CHECK(cls.evaluate_at_one() == cls.substitute_t_squared().evaluate_at_one());
  CHECK(sing.evaluate_at_one() == 15);
  CHECK(reg.evaluate_at_one() == 14);
}

TEST_CASE("L-equivalence identity") {
  auto id = derive_L_equivalence();
  CHECK(!id.trivial);
  CHECK(id.identity() == "([X]-[Y])*L^7 = 0");
  CHECK(id.factor == MotivicPolynomial::monomial(7));
  CHECK(id.x_coefficient == 1);
  // the two decompositions of [Q] are recorded
  CHECK(id.q_via_first_projection.parts.size() == 2);
  CHECK(id.q_via_second_projection.parts.size() == 2);
}

TEST_CASE("L-equivalence degenerate variants") {
  auto [sing, reg] = hyperplane_section_classes();
  auto same = derive_L_equivalence(reg, reg);
  CHECK(same.trivial);
  CHECK(same.identity() == "0 = 0");

  auto swapped = derive_L_equivalence(reg, sing);
  CHECK(!swapped.trivial);
  CHECK(swapped.x_coefficient == -1);
  CHECK(swapped.identity() == "([Y]-[X])*L^7 = 0");

  // a non-monomial difference still factors and prints parenthesized
  MotivicPolynomial bumpy = sing + MotivicPolynomial::monomial(2);
  auto lumpy = derive_L_equivalence(bumpy, reg);
  CHECK(lumpy.identity() == "([X]-[Y])*(L^2 + L^7) = 0");
}

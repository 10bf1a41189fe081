#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <thread>

#include "oracles.hpp"
#include "spinvar/rng.hpp"
#include "spinvar/weights.hpp"

using namespace spinvar::weights;
using spinvar::SplitMix64;

namespace {

Weight fund(const RootSystemD& rs, std::vector<std::int64_t> a) {
  a.resize(static_cast<size_t>(rs.rank()), 0);
  return Weight::from_fundamental(a);
}

Weight random_dominant(const RootSystemD& rs, SplitMix64& rng,
                       std::int64_t max_eps) {
  // random dominant weight with |eps coordinates| <= max_eps
  const int n = rs.rank();
  for (;;) {
    std::int64_t par = static_cast<std::int64_t>(rng.below(2));
    std::vector<std::int64_t> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::int64_t v = static_cast<std::int64_t>(rng.below(
                           static_cast<std::uint64_t>(max_eps) + 1)) *
                       2;
      d[static_cast<size_t>(i)] = v + par;
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    if (rng.coin()) d.back() = -d.back();
    Weight w{d};
    if (w.is_dominant()) return w;
  }
}

Weight random_weight(const RootSystemD& rs, SplitMix64& rng,
                     std::int64_t max_eps) {
  const int n = rs.rank();
  std::int64_t par = static_cast<std::int64_t>(rng.below(2));
  std::vector<std::int64_t> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::int64_t v =
        static_cast<std::int64_t>(rng.below(2 * static_cast<std::uint64_t>(max_eps) + 1)) -
        max_eps;
    d[static_cast<size_t>(i)] = 2 * v + par;
  }
  return Weight{d};
}

}  // namespace

TEST_CASE("root datum invariants") {
  for (int n = 4; n <= 8; ++n) {
    RootSystemD rs(n);
    CHECK(rs.positive_roots().size() == static_cast<size_t>(n * (n - 1)));
    // rho in eps-coordinates is (n-1, n-2, ..., 1, 0)
    for (int i = 0; i < n; ++i)
      CHECK(rs.rho().twice_at(i) == 2 * (n - 1 - i));
    // <omega_i, alpha_j^vee> = delta_ij
    for (int i = 1; i <= n; ++i) {
      auto a = rs.fundamental_weight(i).fundamental_coords();
      for (int j = 1; j <= n; ++j)
        CHECK(a[static_cast<size_t>(j - 1)] == (i == j ? 1 : 0));
    }
    // rho = sum of fundamental weights
    Weight s = Weight::zero(n);
    for (int i = 1; i <= n; ++i) s += rs.fundamental_weight(i);
    CHECK(s == rs.rho());
  }
}

TEST_CASE("weight parsing and printing") {
  RootSystemD rs(5);
  Weight w5 = rs.fundamental_weight(5);
  CHECK(parse_weight("eps:[1/2,1/2,1/2,1/2,1/2]") == w5);
  CHECK(parse_weight("fund:[0,0,0,0,1]") == w5);
  CHECK(format_eps(w5) == "eps:[1/2,1/2,1/2,1/2,1/2]");
  CHECK(format_fund(w5) == "fund:[0,0,0,0,1]");
  CHECK(parse_weight("eps:[1, 0, 0, 0, 0]") == rs.fundamental_weight(1));
  CHECK_THROWS_AS(parse_weight("eps:[1/2,0,0,0,0]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("eps:[1/3,0,0,0,0]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("nope:[1]"), std::invalid_argument);
  // round trip on random weights
  SplitMix64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Weight w = random_weight(rs, rng, 6);
    CHECK(parse_weight(format_eps(w)) == w);
    CHECK(parse_weight(format_fund(w)) == w);
  }
}

TEST_CASE("Weyl dimension formula") {
  RootSystemD rs(5);
  CHECK(weyl_dimension(rs, rs.fundamental_weight(5)) == 16);
  CHECK(weyl_dimension(rs, rs.fundamental_weight(4)) == 16);
  CHECK(weyl_dimension(rs, Weight::zero(5)) == 1);
  CHECK(weyl_dimension(rs, rs.fundamental_weight(1)) == 10);
  CHECK(weyl_dimension(rs, rs.fundamental_weight(2)) == 45);
  CHECK(weyl_dimension(rs, rs.fundamental_weight(3)) == 120);
  CHECK(weyl_dimension(rs, fund(rs, {0, 0, 0, 1, 1})) == 210);
  CHECK(weyl_dimension(rs, fund(rs, {1, 0, 1, 0, 0})) == 945);

  CHECK_THROWS_WITH_AS(weyl_dimension(rs, parse_weight("eps:[0,1,0,0,0]")),
                       doctest::Contains("c[1] < c[2]"), std::domain_error);
  CHECK_THROWS_WITH_AS(weyl_dimension(rs, parse_weight("eps:[1,0,0,0,-1]")),
                       doctest::Contains("c[4] < |c[5]|"), std::domain_error);
}

TEST_CASE("dimension via Freudenthal character sum") {
  // independent route: sum of multiplicity * orbit size
  for (int n : {4, 5}) {
    RootSystemD rs(n);
    SplitMix64 rng(11);
    std::vector<Weight> samples = {rs.fundamental_weight(n),
                                   fund(rs, {0, 0, 0, 1, 1})};
    for (int t = 0; t < 3; ++t) samples.push_back(random_dominant(rs, rng, 2));
    for (const auto& lam : samples) {
      if (!lam.is_dominant()) continue;
      mpz_class total = 0;
      for (const auto& [mu, m] : dominant_weight_multiplicities(rs, lam))
        total += m * static_cast<unsigned long>(weyl_orbit(rs, mu).size());
      CHECK(total == weyl_dimension(rs, lam));
    }
  }
}

TEST_CASE("half-spin diagram symmetry") {
  for (int n : {4, 5, 6}) {
    RootSystemD rs(n);
    SplitMix64 rng(23);
    for (int t = 0; t < 40; ++t) {
      Weight w = random_dominant(rs, rng, 4);
      auto d = w.twice();
      d.back() = -d.back();  // swap omega_{n-1} <-> omega_n
      CHECK(weyl_dimension(rs, w) == weyl_dimension(rs, Weight{d}));
    }
  }
}

TEST_CASE("dominant conjugate") {
  RootSystemD rs(5);
  // the worked Bott step: tau = omega1+omega2+2*omega3+omega4-omega5
  Weight tau = fund(rs, {1, 1, 2, 1, -1});
  CHECK(tau == parse_weight("eps:[4,3,2,0,-1]"));
  auto res = dominant_conjugate(rs, tau);
  CHECK(!res.singular);
  CHECK(res.weight == rs.rho());
  CHECK(res.length == 1);

  auto res2 = dominant_conjugate(rs, rs.rho());
  CHECK(!res2.singular);
  CHECK(res2.length == 0);
  CHECK(res2.weight == rs.rho());

  CHECK(dominant_conjugate(rs, parse_weight("eps:[2,2,1,0,-1]")).singular);
  CHECK(dominant_conjugate(rs, parse_weight("eps:[2,1,0,-1,-2]")).singular);

  SplitMix64 rng(99);
  for (int t = 0; t < 200; ++t) {
    Weight w = random_weight(rs, rng, 8);
    auto r = dominant_conjugate(rs, w);
    if (r.singular) {
      CHECK(!is_regular(w));
      continue;
    }
    CHECK(r.weight.is_dominant());
    CHECK(is_regular(w));
    // agreement with the sorting shortcut
    CHECK(r.weight == dominate(w));
    CHECK((r.length % 2 == 0 ? 1 : -1) == dominate_sign(w));
    // involutive on dominant inputs
    auto rr = dominant_conjugate(rs, r.weight);
    CHECK(rr.length == 0);
    CHECK(rr.weight == r.weight);
  }
}

TEST_CASE("weight multiplicity examples") {
  RootSystemD rs(5);
  Weight w1 = rs.fundamental_weight(1);
  CHECK(weight_multiplicity(rs, w1, Weight::eps(5, 1)) == 1);
  CHECK(weight_multiplicity(rs, w1, Weight::zero(5)) == 0);
  CHECK(weight_multiplicity(rs, rs.fundamental_weight(2), Weight::zero(5)) == 5);
  // V_{omega_1} has weights exactly +-eps_i
  auto ws = weight_system(rs, w1);
  CHECK(ws.size() == 10);
  for (int i = 1; i <= 5; ++i) {
    CHECK(ws.at(Weight::eps(5, i)) == 1);
    CHECK(ws.at(-Weight::eps(5, i)) == 1);
  }
}

TEST_CASE("weight multiplicity against the Kostant oracle") {
  for (int n : {4, 5}) {
    RootSystemD rs(n);
    oracles::KostantMultiplicity oracle(rs);
    // every dominant lambda with dim <= 10^4 (a single fundamental
    // coordinate of 10 already overshoots the bound in rank >= 4)
    std::vector<std::int64_t> a(static_cast<size_t>(n), 0);
    std::vector<Weight> lambdas;
    auto enumerate = [&](auto&& self, size_t pos) -> void {
      if (pos == a.size()) {
        Weight lam = Weight::from_fundamental(a);
        if (weyl_dimension(rs, lam) <= 10000) lambdas.push_back(lam);
        return;
      }
      for (std::int64_t v = 0; v <= 9; ++v) {
        a[pos] = v;
        self(self, pos + 1);
      }
      a[pos] = 0;
    };
    enumerate(enumerate, 0);
    CHECK(lambdas.size() > 10);
    SplitMix64 rng(201);
    for (const auto& lam : lambdas) {
      auto table = dominant_weight_multiplicities(rs, lam);
      for (const auto& [mu, m] : table)
        CHECK(m == oracle.multiplicity(lam, mu));
      // a few weights off the table must have multiplicity zero
      for (int t = 0; t < 5; ++t) {
        Weight mu = random_weight(rs, rng, 4);
        if (!table.count(dominate(mu)))
          CHECK(weight_multiplicity(rs, lam, mu) == 0);
      }
    }
  }
}

TEST_CASE("tensor decomposition, Spin(10) pairs from the reconstruction") {
  RootSystemD rs(5);
  auto d1 = tensor_decompose(rs, rs.fundamental_weight(5), rs.fundamental_weight(4));
  CHECK(d1.size() == 3);
  CHECK(d1.at(fund(rs, {0, 0, 0, 1, 1})) == 1);
  CHECK(d1.at(rs.fundamental_weight(2)) == 1);
  CHECK(d1.at(Weight::zero(5)) == 1);

  auto d2 = tensor_decompose(rs, rs.fundamental_weight(3), rs.fundamental_weight(1));
  CHECK(d2.size() == 3);
  CHECK(d2.at(fund(rs, {0, 0, 0, 1, 1})) == 1);
  CHECK(d2.at(rs.fundamental_weight(2)) == 1);
  CHECK(d2.at(fund(rs, {1, 0, 1, 0, 0})) == 1);

  // tensoring with the trivial module
  auto d3 = tensor_decompose(rs, fund(rs, {2, 1, 0, 0, 3}), Weight::zero(5));
  CHECK(d3.size() == 1);
  CHECK(d3.at(fund(rs, {2, 1, 0, 0, 3})) == 1);
}

TEST_CASE("tensor decomposition conserves dimension") {
  for (int n : {4, 5}) {
    RootSystemD rs(n);
    SplitMix64 rng(n == 5 ? 31337 : 404);
    int trials = n == 5 ? 100 : 25;
    for (int t = 0; t < trials; ++t) {
      Weight lam = random_dominant(rs, rng, 3);
      Weight mu = random_dominant(rs, rng, 3);
      mpz_class expected = weyl_dimension(rs, lam) * weyl_dimension(rs, mu);
      mpz_class total = 0;
      for (const auto& [nu, m] : tensor_decompose(rs, lam, mu))
        total += m * weyl_dimension(rs, nu);
      CHECK(total == expected);
    }
  }
}

TEST_CASE("tensor decomposition is symmetric in its factors") {
  // the algorithm expands the weight system of the second factor, so the
  // two orders run through different data
  RootSystemD rs(5);
  SplitMix64 rng(777);
  for (int t = 0; t < 20; ++t) {
    Weight lam = random_dominant(rs, rng, 2);
    Weight mu = random_dominant(rs, rng, 2);
    CHECK(tensor_decompose(rs, lam, mu) == tensor_decompose(rs, mu, lam));
  }
}

TEST_CASE("concurrent callers share the multiplicity cache") {
  RootSystemD rs(5);
  Weight lam = fund(rs, {0, 1, 0, 1, 0});
  auto expected = tensor_decompose(rs, lam, rs.fundamental_weight(1));
  std::vector<std::thread> workers;
  std::vector<int> good(4, 0);
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (int i = 0; i < 5; ++i)
        if (tensor_decompose(rs, lam, rs.fundamental_weight(1)) == expected)
          ++good[static_cast<size_t>(w)];
    });
  for (auto& t : workers) t.join();
  for (int w = 0; w < 4; ++w) CHECK(good[static_cast<size_t>(w)] == 5);
}

TEST_CASE("consistency of the two dominance routines on singular input") {
  RootSystemD rs(5);
  SplitMix64 rng(5150);
  for (int t = 0; t < 200; ++t) {
    Weight w = random_weight(rs, rng, 3);
    Weight rep = dominate(w);
    CHECK(rep.is_dominant());
    // the representative lies in the orbit
    auto orbit = weyl_orbit(rs, w);
    CHECK(std::find(orbit.begin(), orbit.end(), rep) != orbit.end());
  }
}

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinvar/bott.hpp"

namespace spinvar::euler {

using bott::BundleExpression;
using bott::BundleSpec;

/*
  Cohomology on the double spinor fivefold X through two devices:

   - the self-dual resolution of O_X by twists of O_S, which turns sheaf
     cohomology on X into Bott computations on S, and
   - the Koszul complex of the conormal bundle U^vee(-2) of one copy of S,
     which does the same for Euler characteristics.
*/

// univariate polynomial with rational coefficients that takes integer
// values on integers (checked on construction over -20..20)
class IntegerPolynomial {
 public:
  explicit IntegerPolynomial(std::vector<mpq_class> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  mpq_class leading_coefficient() const;
  mpq_class evaluate(const mpq_class& x) const;
  mpz_class evaluate_at_integer(std::int64_t k) const;
  std::string to_string(const std::string& var = "k") const;

 private:
  std::vector<mpq_class> coeffs_;
};

// Hilbert polynomial of S in P(Delta): closed product form
mpz_class hilbert_S(std::int64_t k);
IntegerPolynomial hilbert_S_polynomial();

// Hilbert polynomial of X; evaluates both the resolution route and the
// closed form and insists they agree.
mpz_class hilbert_X(std::int64_t k);

// chi(X, e|_X) via the Koszul complex of U^vee(-2)
mpz_class koszul_euler_on_X(const BundleExpression& e);

struct HodgeTable {
  std::array<std::array<std::int64_t, 6>, 6> h{};

  std::int64_t chi_top() const;
  bool symmetric() const;  // Hodge and Serre symmetry
};

HodgeTable hodge_numbers_X();

// one nonzero first-page entry of the resolution spectral sequence
struct PageEntry {
  int column;             // index of the resolution term
  std::string term;       // display name of the term
  int q;                  // cohomological degree on S
  mpz_class dimension;    // including the multiplicity space
  int total_degree() const { return q - column; }
};

struct RestrictionCohomology {
  bool exact = false;                // false: spectral sequence not forced
  std::array<mpz_class, 6> h{};      // valid iff exact
  std::vector<PageEntry> page;       // always populated
};

RestrictionCohomology cohomology_on_X(const BundleSpec& b);

}  // namespace spinvar::euler

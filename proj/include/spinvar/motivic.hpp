#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spinvar::motivic {

/*
  Grothendieck-ring arithmetic for cell-decomposable classes.  A class with
  a decomposition into affine cells is a polynomial in L, the class of the
  affine line; the coefficient of L^k counts the 2k-cells, and L -> t^2
  recovers the Poincare polynomial.
*/

class MotivicPolynomial {
 public:
  MotivicPolynomial() : coeffs_{0} {}
  explicit MotivicPolynomial(std::vector<mpz_class> coeffs);
  static MotivicPolynomial monomial(int degree, mpz_class c = 1);

  int degree() const;
  bool is_zero() const;
  mpz_class coefficient(int k) const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class evaluate_at_one() const;  // Euler characteristic of the class
  MotivicPolynomial substitute_t_squared() const;  // L -> t^2

  MotivicPolynomial& operator+=(const MotivicPolynomial& o);
  MotivicPolynomial& operator-=(const MotivicPolynomial& o);
  friend MotivicPolynomial operator+(MotivicPolynomial a, const MotivicPolynomial& b) { return a += b; }
  friend MotivicPolynomial operator-(MotivicPolynomial a, const MotivicPolynomial& b) { return a -= b; }
  friend MotivicPolynomial operator*(const MotivicPolynomial& a, const MotivicPolynomial& b);
  MotivicPolynomial operator-() const;
  friend bool operator==(const MotivicPolynomial& a, const MotivicPolynomial& b) = default;

  // coefficient list, lowest degree first: "[1,1,1,2,...]"
  std::string coefficient_list() const;
  // human form in the given variable
  std::string to_string(const std::string& var = "L") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;  // coeffs_[k] multiplies L^k
};

// partitions of k into distinct parts, each at most max_part
mpz_class strict_partition_count(std::int64_t k, std::int64_t max_part);

// Poincare polynomial of the spinor variety (rank 5), built from strict
// partition counts and checked against the closed product form.
MotivicPolynomial poincare_S();

// classes of the singular and the smooth hyperplane section, in L
std::pair<MotivicPolynomial, MotivicPolynomial> hyperplane_section_classes();

// the symbolic atoms of the fibration bookkeeping
enum class BaseSymbol { X, Y, S, S_dual };
std::string to_string(BaseSymbol s);

// sum over base symbols of (symbol) x (fiber class)
struct FibrationDecomposition {
  std::map<BaseSymbol, MotivicPolynomial> parts;

  FibrationDecomposition& add(BaseSymbol s, const MotivicPolynomial& p);
  std::string to_string() const;
};

struct LEquivalence {
  FibrationDecomposition q_via_second_projection;  // [Q] fibered over S2^vee
  FibrationDecomposition q_via_first_projection;   // [Q] fibered over S1
  MotivicPolynomial factor;      // the common fiber-difference factor
  int x_coefficient = 0;         // +1: ([X]-[Y])*factor, -1: ([Y]-[X])*factor
  bool trivial = false;          // the difference vanished identically

  std::string identity() const;  // e.g. "([X]-[Y])*L^7 = 0"
};

// Builds both decompositions of the incidence class [Q], subtracts, and
// factors the difference.  The defaults are the two hyperplane-section
// classes; other fibers are accepted for the degenerate variants.
LEquivalence derive_L_equivalence();
LEquivalence derive_L_equivalence(const MotivicPolynomial& sing,
                                  const MotivicPolynomial& reg);

}  // namespace spinvar::motivic

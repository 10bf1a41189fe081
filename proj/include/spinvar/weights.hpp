#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spinvar::weights {

/*
  Root-system, Weyl-group and character arithmetic for type D_n.

  Weights live in the eps-basis of the weight lattice.  Every coordinate is
  an integer or a half-integer, and within one weight all coordinates have
  the same fractional part, so we store the doubled coordinates as int64.
  This keeps the spin weights (all coordinates 1/2) integral and removes
  rational arithmetic from the inner loops.
*/

class Weight {
 public:
  // twice_coords are the doubled eps-coordinates; they must all share one
  // parity (the weight-lattice condition for D_n).
  explicit Weight(std::vector<std::int64_t> twice_coords);

  static Weight zero(int rank);
  // sum a_i omega_i; rank is the length of coeffs
  static Weight from_fundamental(const std::vector<std::int64_t>& coeffs);
  static Weight fundamental(int rank, int i);  // omega_i, 1-based
  static Weight eps(int rank, int i);          // eps_i, 1-based

  int rank() const { return static_cast<int>(twice_.size()); }
  const std::vector<std::int64_t>& twice() const { return twice_; }
  std::int64_t twice_at(int i) const { return twice_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  bool is_dominant() const;     // c_1 >= ... >= c_{n-1} >= |c_n|
  bool is_gl_dominant() const;  // c_1 >= ... >= c_n
  bool is_integral() const;     // all eps-coordinates integral

  // a_i = <lambda, alpha_i^vee>
  std::vector<std::int64_t> fundamental_coords() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t c, Weight a);
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.twice_ < b.twice_;
  }

 private:
  std::vector<std::int64_t> twice_;
};

// "eps:[...]" with rationals of denominator 1 or 2, or "fund:[...]".
Weight parse_weight(const std::string& text);
std::string format_eps(const Weight& w);
std::string format_fund(const Weight& w);
std::string format_weight(const Weight& w);  // both bases

/// The root datum of D_n (4 <= n <= 8), with the simple roots
/// alpha_i = eps_i - eps_{i+1} (i < n) and alpha_n = eps_{n-1} + eps_n.
class RootSystemD {
 public:
  explicit RootSystemD(int rank);

  int rank() const { return rank_; }
  std::uint64_t weyl_order() const;  // 2^{n-1} n!
  const Weight& rho() const { return rho_; }
  Weight fundamental_weight(int i) const;  // 1-based
  Weight simple_root(int i) const;         // 1-based

  struct PositiveRoot {
    int i, j;  // 0-based, i < j
    int sign;  // +1: eps_i + eps_j, -1: eps_i - eps_j
  };
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }

 private:
  int rank_;
  Weight rho_;
  std::vector<PositiveRoot> positive_;
};

struct IrreducibleModule {
  Weight highest_weight;
  mpz_class dimension;
};

IrreducibleModule make_module(const RootSystemD& rs, const Weight& lambda);

// Weyl dimension formula; throws std::domain_error naming the violated
// dominance inequality when lambda is not dominant.
mpz_class weyl_dimension(const RootSystemD& rs, const Weight& lambda);

struct DominantConjugate {
  bool singular = false;
  Weight weight;  // the dominant representative (meaningful if !singular)
  int length = 0; // number of simple reflections applied
};

// Repeated simple reflections, always the lowest-index negative pairing.
DominantConjugate dominant_conjugate(const RootSystemD& rs, const Weight& mu);

// Orbit representative in the dominant chamber (works for singular weights
// too).  dominate_sign additionally returns (-1)^length and requires mu
// regular.
Weight dominate(const Weight& mu);
int dominate_sign(const Weight& mu);
bool is_regular(const Weight& mu);  // not orthogonal to any root

mpz_class weight_multiplicity(const RootSystemD& rs, const Weight& lambda,
                              const Weight& mu);

// Freudenthal recursion: multiplicities of all dominant weights of V_lambda.
std::map<Weight, mpz_class> dominant_weight_multiplicities(
    const RootSystemD& rs, const Weight& lambda);

// Full weight system of V_lambda (dominant table expanded along Weyl orbits).
std::map<Weight, mpz_class> weight_system(const RootSystemD& rs,
                                          const Weight& lambda);

std::vector<Weight> weyl_orbit(const RootSystemD& rs, const Weight& mu);

// Brauer-Klimyk tensor product decomposition.
std::map<Weight, mpz_class> tensor_decompose(const RootSystemD& rs,
                                             const Weight& lambda,
                                             const Weight& mu);

}  // namespace spinvar::weights

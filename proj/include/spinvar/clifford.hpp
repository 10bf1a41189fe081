#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinvar/rng.hpp"

namespace spinvar::clifford {

/*
  Exact model of the split ten-dimensional quadratic space
  q(x) = x_1 x_6 + ... + x_5 x_10, its Clifford algebra acting on the
  32-dimensional exterior algebra of E^vee, and the pure-spinor geometry:
  maximal isotropic subspaces, the parametrization by skew forms, the ten
  quadric equations, the duality pairing and the tangency trichotomy.

  Everything is templated over a field context; the two instances are exact
  rationals and Z/p for a large odd prime.  Spinor coordinates are indexed
  by subsets of {1..5} as bitmasks.
*/

// ---------------------------------------------------------------------------
// field contexts

class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("modulus must be an odd prime");
  }

  static bool is_prime(std::uint64_t n);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }

  Element from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Element>(m);
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Element random(SplitMix64& rng) const { return rng.below(p_); }

  std::string to_string(Element a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
};

inline bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t out = 1;
    a %= n;
    while (e) {
      if (e & 1) out = mulmod(out, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return out;
  };
  // deterministic for 64-bit inputs with this base set
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return mpq_class(0); }
  Element one() const { return mpq_class(1); }
  bool is_zero(const Element& a) const { return a == 0; }
  Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a / inv_guard(b); }
  Element random(SplitMix64& rng) const {
    std::int64_t num = static_cast<std::int64_t>(rng.below(21)) - 10;
    std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(4));
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }
  std::string to_string(const Element& a) const { return a.get_str(); }

 private:
  static const Element& inv_guard(const Element& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return b;
  }
};

template <class F>
using Vec = std::vector<typename F::Element>;
template <class F>
using Mat = std::vector<Vec<F>>;

// ---------------------------------------------------------------------------
// exact linear algebra

template <class F>
int row_reduce(const F& k, Mat<F>& m, std::vector<int>* pivots = nullptr) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!k.is_zero(m[static_cast<size_t>(r)][static_cast<size_t>(col)])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(rank)]);
    auto scale = k.inv(m[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
    for (int c = col; c < cols; ++c)
      m[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
          k.mul(m[static_cast<size_t>(rank)][static_cast<size_t>(c)], scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (k.is_zero(f)) continue;
      for (int c = col; c < cols; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            k.sub(m[static_cast<size_t>(r)][static_cast<size_t>(c)],
                  k.mul(f, m[static_cast<size_t>(rank)][static_cast<size_t>(c)]));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(const F& k, Mat<F> m) {
  return row_reduce(k, m);
}

// right kernel of an m x n matrix
template <class F>
Mat<F> kernel_basis(const F& k, Mat<F> m) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots;
  int rank = row_reduce(k, m, &pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  Mat<F> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec<F> v(static_cast<size_t>(cols), k.zero());
    v[static_cast<size_t>(free)] = k.one();
    for (int r = 0; r < rank; ++r) {
      int pc = pivots[static_cast<size_t>(r)];
      v[static_cast<size_t>(pc)] =
          k.neg(m[static_cast<size_t>(r)][static_cast<size_t>(free)]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// one solution of A x = rhs, if any
template <class F>
std::optional<Vec<F>> solve_particular(const F& k, Mat<F> a, Vec<F> rhs) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int r = 0; r < rows; ++r) a[static_cast<size_t>(r)].push_back(rhs[static_cast<size_t>(r)]);
  std::vector<int> pivots;
  int rank = row_reduce(k, a, &pivots);
  Vec<F> x(static_cast<size_t>(cols), k.zero());
  for (int r = 0; r < rank; ++r) {
    if (pivots[static_cast<size_t>(r)] == cols) return std::nullopt;  // inconsistent
    x[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
        a[static_cast<size_t>(r)][static_cast<size_t>(cols)];
  }
  return x;
}

// ---------------------------------------------------------------------------
// the split form on F^10

template <class F>
typename F::Element quadratic_form(const F& k, const Vec<F>& x) {
  auto s = k.zero();
  for (int i = 0; i < 5; ++i)
    s = k.add(s, k.mul(x[static_cast<size_t>(i)], x[static_cast<size_t>(i) + 5]));
  return s;
}

template <class F>
typename F::Element bilinear_form(const F& k, const Vec<F>& x, const Vec<F>& y) {
  // polarization b(x,y) = q(x+y) - q(x) - q(y)
  auto s = k.zero();
  for (int i = 0; i < 5; ++i) {
    s = k.add(s, k.mul(x[static_cast<size_t>(i)], y[static_cast<size_t>(i) + 5]));
    s = k.add(s, k.mul(x[static_cast<size_t>(i) + 5], y[static_cast<size_t>(i)]));
  }
  return s;
}

// ---------------------------------------------------------------------------
// domain types

enum class Parity { even, odd };

inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

template <class F>
struct IsotropicSubspace {
  Mat<F> basis;  // 5 rows, 10 columns (e_1..e_5, f_1..f_5)
};

template <class F>
bool is_isotropic(const F& k, const IsotropicSubspace<F>& w) {
  if (w.basis.size() != 5) return false;
  for (const auto& row : w.basis)
    if (row.size() != 10) return false;
  if (rank_of(k, w.basis) != 5) return false;
  for (size_t i = 0; i < 5; ++i) {
    if (!k.is_zero(quadratic_form(k, w.basis[i]))) return false;
    for (size_t j = i + 1; j < 5; ++j)
      if (!k.is_zero(bilinear_form(k, w.basis[i], w.basis[j]))) return false;
  }
  return true;
}

template <class F>
struct SkewForm {
  Mat<F> omega;  // 5 x 5, omega^T = -omega

  static SkewForm zero(const F& k) {
    return SkewForm{Mat<F>(5, Vec<F>(5, k.zero()))};
  }
};

template <class F>
bool is_skew(const F& k, const SkewForm<F>& w) {
  if (w.omega.size() != 5) return false;
  for (size_t i = 0; i < 5; ++i) {
    if (w.omega[i].size() != 5) return false;
    for (size_t j = 0; j < 5; ++j)
      if (!k.is_zero(k.add(w.omega[i][j], w.omega[j][i]))) return false;
  }
  return true;
}

template <class F>
struct SpinorVector {
  std::array<typename F::Element, 32> coords;  // indexed by subset bitmask
  Parity parity = Parity::even;
};

template <class F>
SpinorVector<F> zero_spinor(const F& k, Parity p) {
  SpinorVector<F> s;
  s.coords.fill(k.zero());
  s.parity = p;
  return s;
}

template <class F>
SpinorVector<F> basis_spinor(const F& k, unsigned mask) {
  SpinorVector<F> s = zero_spinor(k, __builtin_popcount(mask) % 2 ? Parity::odd : Parity::even);
  s.coords[mask] = k.one();
  return s;
}

template <class F>
bool spinor_is_zero(const F& k, const SpinorVector<F>& s) {
  for (const auto& c : s.coords)
    if (!k.is_zero(c)) return false;
  return true;
}

// checks the one-parity support invariant
template <class F>
bool parity_consistent(const F& k, const SpinorVector<F>& s) {
  for (unsigned m = 0; m < 32; ++m)
    if (!k.is_zero(s.coords[m]) &&
        (__builtin_popcount(m) % 2 ? Parity::odd : Parity::even) != s.parity)
      return false;
  return true;
}

// subsets of {1..5} in lexicographic order on sorted tuples, empty set first;
// this is the serialization order of spinor coordinates
inline const std::array<unsigned, 32>& subset_lex_order() {
  static const std::array<unsigned, 32> order = [] {
    std::array<unsigned, 32> out{};
    size_t n = 0;
    auto rec = [&](auto&& self, unsigned mask, int last) -> void {
      out[n++] = mask;
      for (int next = last + 1; next < 5; ++next)
        self(self, mask | (1u << next), next);
    };
    rec(rec, 0, -1);
    return out;
  }();
  return order;
}

// ---------------------------------------------------------------------------
// Clifford action

namespace detail {
inline int below_sign(unsigned mask, int i) {
  // (-1)^{#(elements of mask below i)}
  return __builtin_popcount(mask & ((1u << i) - 1)) % 2 ? -1 : 1;
}
}  // namespace detail

// v = (a_1..a_5, y_1..y_5): the e-part contracts, the f-part wedges
template <class F>
SpinorVector<F> clifford_action(const F& k, const Vec<F>& v, const SpinorVector<F>& s) {
  if (v.size() != 10) throw std::invalid_argument("vector must have 10 coordinates");
  SpinorVector<F> out = zero_spinor(k, opposite(s.parity));
  for (unsigned m = 0; m < 32; ++m) {
    const auto& c = s.coords[m];
    if (k.is_zero(c)) continue;
    for (int i = 0; i < 5; ++i) {
      int sgn = detail::below_sign(m, i);
      if (m & (1u << i)) {  // contraction by e_{i+1}
        const auto& a = v[static_cast<size_t>(i)];
        if (k.is_zero(a)) continue;
        auto term = k.mul(a, c);
        if (sgn < 0) term = k.neg(term);
        unsigned tgt = m & ~(1u << i);
        out.coords[tgt] = k.add(out.coords[tgt], term);
      } else {  // wedge by f_{i+1} = e_{i+1}^vee
        const auto& y = v[static_cast<size_t>(i) + 5];
        if (k.is_zero(y)) continue;
        auto term = k.mul(y, c);
        if (sgn < 0) term = k.neg(term);
        unsigned tgt = m | (1u << i);
        out.coords[tgt] = k.add(out.coords[tgt], term);
      }
    }
  }
  return out;
}

// the 32x32 matrix of the Clifford action of v, columns indexed by source mask
template <class F>
Mat<F> clifford_matrix(const F& k, const Vec<F>& v) {
  Mat<F> m(32, Vec<F>(32, k.zero()));
  for (unsigned src = 0; src < 32; ++src) {
    for (int i = 0; i < 5; ++i) {
      int sgn = detail::below_sign(src, i);
      if (src & (1u << i)) {
        auto term = v[static_cast<size_t>(i)];
        if (sgn < 0) term = k.neg(term);
        unsigned tgt = src & ~(1u << i);
        m[tgt][src] = k.add(m[tgt][src], term);
      } else {
        auto term = v[static_cast<size_t>(i) + 5];
        if (sgn < 0) term = k.neg(term);
        unsigned tgt = src | (1u << i);
        m[tgt][src] = k.add(m[tgt][src], term);
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// pure spinors and quadrics

// [1, omega, sub-Pfaffians of omega]
template <class F>
SpinorVector<F> spinor_from_omega(const F& k, const SkewForm<F>& w) {
  if (!is_skew(k, w)) throw std::invalid_argument("form is not skew-symmetric");
  SpinorVector<F> s = zero_spinor(k, Parity::even);
  s.coords[0] = k.one();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      s.coords[(1u << i) | (1u << j)] = w.omega[static_cast<size_t>(i)][static_cast<size_t>(j)];
  // 4-subsets carry the Pfaffian of the corresponding 4x4 block
  for (int m = 0; m < 5; ++m) {
    int idx[4];
    int n = 0;
    for (int i = 0; i < 5; ++i)
      if (i != m) idx[n++] = i;
    const auto& o = w.omega;
    auto pf = k.sub(
        k.add(k.mul(o[static_cast<size_t>(idx[0])][static_cast<size_t>(idx[1])],
                    o[static_cast<size_t>(idx[2])][static_cast<size_t>(idx[3])]),
              k.mul(o[static_cast<size_t>(idx[0])][static_cast<size_t>(idx[3])],
                    o[static_cast<size_t>(idx[1])][static_cast<size_t>(idx[2])])),
        k.mul(o[static_cast<size_t>(idx[0])][static_cast<size_t>(idx[2])],
              o[static_cast<size_t>(idx[1])][static_cast<size_t>(idx[3])]));
    s.coords[31u & ~(1u << m)] = pf;
  }
  return s;
}

// kernel line of the five Clifford operators of a basis of W
template <class F>
SpinorVector<F> pure_spinor(const F& k, const IsotropicSubspace<F>& w) {
  if (w.basis.size() != 5) throw std::invalid_argument("basis must have 5 rows");
  Mat<F> stacked;
  stacked.reserve(160);
  for (const auto& row : w.basis) {
    Mat<F> m = clifford_matrix(k, row);
    for (auto& r : m) stacked.push_back(std::move(r));
  }
  Mat<F> ker = kernel_basis(k, std::move(stacked));
  if (ker.size() != 1)
    throw std::domain_error("not isotropic / degenerate input: kernel has dimension " +
                            std::to_string(ker.size()));
  SpinorVector<F> s = zero_spinor(k, Parity::even);
  for (unsigned m = 0; m < 32; ++m) s.coords[m] = ker[0][m];
  // normalize so the first nonzero coordinate in subset-lex order is 1
  for (unsigned m : subset_lex_order()) {
    if (k.is_zero(s.coords[m])) continue;
    auto scale = k.inv(s.coords[m]);
    for (auto& c : s.coords) c = k.mul(c, scale);
    s.parity = __builtin_popcount(m) % 2 ? Parity::odd : Parity::even;
    break;
  }
  if (!parity_consistent(k, s))
    throw std::logic_error("pure spinor has mixed parity");
  return s;
}

/*
  The ten quadric residuals of an even spinor [w0, w2, w4]: five components
  of 2*w0*w4 - w2 /\ w2 in wedge^4 E^vee identified with E through
  Y_m = (-1)^{m+1} w4[complement of m], then five components of the
  contraction of w2 by the same Y.  They vanish exactly on pure spinors.
*/
template <class F>
std::array<typename F::Element, 10> quadric_residuals(const F& k, const SpinorVector<F>& s) {
  if (s.parity != Parity::even) throw std::invalid_argument("even spinor expected");
  const auto& c = s.coords;
  auto at2 = [&](int i, int j) {  // w2 with skew extension, 0-based
    if (i == j) return k.zero();
    if (i < j) return c[(1u << i) | (1u << j)];
    return k.neg(c[(1u << j) | (1u << i)]);
  };
  std::array<typename F::Element, 10> res;
  std::array<typename F::Element, 5> y;
  for (int m = 0; m < 5; ++m) {
    int idx[4];
    int n = 0;
    for (int i = 0; i < 5; ++i)
      if (i != m) idx[n++] = i;
    // (w2 /\ w2) on the 4-subset = 2 Pf(w2 restricted)
    auto pf = k.sub(k.add(k.mul(at2(idx[0], idx[1]), at2(idx[2], idx[3])),
                          k.mul(at2(idx[0], idx[3]), at2(idx[1], idx[2]))),
                    k.mul(at2(idx[0], idx[2]), at2(idx[1], idx[3])));
    auto w4 = c[31u & ~(1u << m)];
    auto two = k.from_int(2);
    auto r = k.sub(k.mul(two, k.mul(c[0], w4)), k.mul(two, pf));
    if (m % 2 == 1) r = k.neg(r);  // (-1)^{m+1} with 1-based m
    res[static_cast<size_t>(m)] = r;
    auto ym = w4;
    if (m % 2 == 1) ym = k.neg(ym);
    y[static_cast<size_t>(m)] = ym;
  }
  for (int j = 0; j < 5; ++j) {
    auto s2 = k.zero();
    for (int i = 0; i < 5; ++i) s2 = k.add(s2, k.mul(y[static_cast<size_t>(i)], at2(i, j)));
    res[static_cast<size_t>(j) + 5] = s2;
  }
  return res;
}

struct IntersectionData {
  int dim = 0;
  bool same_family = false;
};

template <class F>
IntersectionData intersection_data(const F& k, const IsotropicSubspace<F>& a,
                                   const IsotropicSubspace<F>& b) {
  Mat<F> stacked = a.basis;
  for (const auto& row : b.basis) stacked.push_back(row);
  int dim = 10 - rank_of(k, std::move(stacked));
  return IntersectionData{dim, dim % 2 == 1};
}

// ---------------------------------------------------------------------------
// the duality pairing Delta x Delta^- -> F

template <class F>
typename F::Element pairing(const F& k, const SpinorVector<F>& s, const SpinorVector<F>& t) {
  if (s.parity != Parity::even || t.parity != Parity::odd)
    throw std::invalid_argument("pairing takes an even and an odd spinor");
  auto total = k.zero();
  for (unsigned a = 0; a < 32; ++a) {
    if (k.is_zero(s.coords[a])) continue;
    unsigned b = 31u & ~a;
    if (k.is_zero(t.coords[b])) continue;
    int deg = __builtin_popcount(a);
    // reversal sign on degree deg, then the shuffle sign merging a and b
    int sgn = (deg * (deg - 1) / 2) % 2 ? -1 : 1;
    for (int i = 0; i < 5; ++i)
      if (a & (1u << i)) {
        int below = __builtin_popcount(b & ((1u << i) - 1));
        if (below % 2) sgn = -sgn;
      }
    auto term = k.mul(s.coords[a], t.coords[b]);
    if (sgn < 0) term = k.neg(term);
    total = k.add(total, term);
  }
  return total;
}

// pairing with the arguments sorted by parity
template <class F>
typename F::Element pairing_mixed(const F& k, const SpinorVector<F>& a,
                                  const SpinorVector<F>& b) {
  if (a.parity == Parity::even) return pairing(k, a, b);
  return pairing(k, b, a);
}

// ---------------------------------------------------------------------------
// tangency trichotomy

enum class TangencyClass { generic, contains, tangent };

inline std::string to_string(TangencyClass c) {
  switch (c) {
    case TangencyClass::generic: return "generic";
    case TangencyClass::contains: return "contains";
    case TangencyClass::tangent: return "tangent";
  }
  return "?";
}

template <class F>
Vec<F> standard_basis_vector(const F& k, int i) {
  Vec<F> v(10, k.zero());
  v[static_cast<size_t>(i)] = k.one();
  return v;
}

/*
  Classifies the hyperplane of F against the point E, both by the dimension
  of the intersection and by the vanishing pattern of the pairing and its
  first-order derivatives along the orbit directions v_a v_b s_E (which span
  the affine tangent space of the cone over S at s_E).  The two routes must
  agree.
*/
template <class F>
TangencyClass tangency_classify(const F& k, const IsotropicSubspace<F>& e,
                                const IsotropicSubspace<F>& f) {
  auto data = intersection_data(k, e, f);
  if (data.same_family)
    throw std::invalid_argument("tangency_classify needs opposite families");
  TangencyClass by_dim;
  switch (data.dim) {
    case 0: by_dim = TangencyClass::generic; break;
    case 2: by_dim = TangencyClass::contains; break;
    case 4: by_dim = TangencyClass::tangent; break;
    default:
      throw std::invalid_argument("unexpected intersection dimension " +
                                  std::to_string(data.dim));
  }

  SpinorVector<F> se = pure_spinor(k, e);
  SpinorVector<F> sf = pure_spinor(k, f);
  auto p0 = pairing_mixed(k, se, sf);
  TangencyClass by_calc;
  if (!k.is_zero(p0)) {
    by_calc = TangencyClass::generic;
  } else {
    bool first_order = false;
    for (int a = 0; a < 10 && !first_order; ++a)
      for (int b = a + 1; b < 10 && !first_order; ++b) {
        auto dir = clifford_action(
            k, standard_basis_vector(k, a),
            clifford_action(k, standard_basis_vector(k, b), se));
        if (!k.is_zero(pairing_mixed(k, dir, sf))) first_order = true;
      }
    by_calc = first_order ? TangencyClass::contains : TangencyClass::tangent;
  }
  if (by_calc != by_dim)
    throw std::logic_error("tangency criteria disagree: dimension says " +
                           to_string(by_dim) + ", calculus says " + to_string(by_calc));
  return by_dim;
}

// ---------------------------------------------------------------------------
// constructions and sampling

// coordinate frame: e_i for i outside f_mask, f_i for i in f_mask
template <class F>
IsotropicSubspace<F> coordinate_frame(const F& k, unsigned f_mask) {
  IsotropicSubspace<F> w{Mat<F>(5, Vec<F>(10, k.zero()))};
  for (int i = 0; i < 5; ++i)
    w.basis[static_cast<size_t>(i)][static_cast<size_t>(
        (f_mask & (1u << i)) ? i + 5 : i)] = k.one();
  return w;
}

// graph of a skew form over span(e_1..e_5): rows e_i - sum_j omega_ij f_j
template <class F>
IsotropicSubspace<F> graph_subspace(const F& k, const SkewForm<F>& w) {
  if (!is_skew(k, w)) throw std::invalid_argument("form is not skew-symmetric");
  IsotropicSubspace<F> out{Mat<F>(5, Vec<F>(10, k.zero()))};
  for (int i = 0; i < 5; ++i) {
    out.basis[static_cast<size_t>(i)][static_cast<size_t>(i)] = k.one();
    for (int j = 0; j < 5; ++j)
      out.basis[static_cast<size_t>(i)][static_cast<size_t>(j) + 5] =
          k.neg(w.omega[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return out;
}

template <class F>
SkewForm<F> random_skew_form(const F& k, SplitMix64& rng) {
  SkewForm<F> w = SkewForm<F>::zero(k);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      auto v = k.random(rng);
      w.omega[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      w.omega[static_cast<size_t>(j)][static_cast<size_t>(i)] = k.neg(v);
    }
  return w;
}

namespace detail {

// Eichler transvection E_{u,v}: x -> x + b(x,v)u - b(x,u)v - q(v)b(x,u)u,
// for isotropic u and v in u-perp; preserves the quadratic form.
template <class F>
void apply_transvection(const F& k, const Vec<F>& u, const Vec<F>& v, Vec<F>& x) {
  auto bxv = bilinear_form(k, x, v);
  auto bxu = bilinear_form(k, x, u);
  auto qv = quadratic_form(k, v);
  for (size_t i = 0; i < 10; ++i) {
    auto d = k.mul(bxv, u[i]);
    d = k.sub(d, k.mul(bxu, v[i]));
    d = k.sub(d, k.mul(qv, k.mul(bxu, u[i])));
    x[i] = k.add(x[i], d);
  }
}

template <class F>
Vec<F> random_vector(const F& k, SplitMix64& rng, size_t n) {
  Vec<F> v(n, k.zero());
  for (auto& c : v) c = k.random(rng);
  return v;
}

template <class F>
Vec<F> random_isotropic_vector(const F& k, SplitMix64& rng) {
  for (;;) {
    Vec<F> v = random_vector(k, rng, 10);
    auto q = quadratic_form(k, v);
    if (k.is_zero(q)) return v;
    // fix one coordinate to land on the quadric
    for (int i = 0; i < 10; ++i) {
      int dual = i < 5 ? i + 5 : i - 5;
      if (!k.is_zero(v[static_cast<size_t>(dual)])) {
        v[static_cast<size_t>(i)] = k.sub(
            v[static_cast<size_t>(i)], k.div(q, v[static_cast<size_t>(dual)]));
        return v;
      }
    }
  }
}

template <class F>
Vec<F> random_perp_vector(const F& k, SplitMix64& rng, const Vec<F>& u) {
  for (;;) {
    Vec<F> v = random_vector(k, rng, 10);
    auto b = bilinear_form(k, u, v);
    if (k.is_zero(b)) return v;
    for (int i = 0; i < 10; ++i) {
      int dual = i < 5 ? i + 5 : i - 5;
      if (!k.is_zero(u[static_cast<size_t>(dual)])) {
        v[static_cast<size_t>(i)] = k.sub(
            v[static_cast<size_t>(i)], k.div(b, u[static_cast<size_t>(dual)]));
        return v;
      }
    }
  }
}

}  // namespace detail

template <class F>
Parity family_of(const F& k, const IsotropicSubspace<F>& w) {
  return pure_spinor(k, w).parity;
}

template <class F>
struct IntersectionConstraint {
  IsotropicSubspace<F> meet;
  int target_dim = 0;
  std::optional<Parity> family;  // optional requested family of the sample
};

/*
  Deterministic sampler of maximal isotropic subspaces.  Without a
  constraint: a random coordinate frame moved by a random product of
  Eichler transvections.  With a constraint (W, t): a random t-dimensional
  subspace of W extended by duals from a hyperbolic completion, then moved
  by transvections taken from the pointwise stabilizer of W, so the
  intersection dimension stays exactly t.
*/
template <class F>
IsotropicSubspace<F> random_isotropic(
    const F& k, std::uint64_t seed,
    const std::optional<IntersectionConstraint<F>>& constraint = std::nullopt) {
  SplitMix64 rng(seed ^ 0x517cc1b727220a95ULL);

  if (!constraint) {
    IsotropicSubspace<F> w = coordinate_frame(k, static_cast<unsigned>(rng.below(32)));
    for (int step = 0; step < 25; ++step) {
      Vec<F> u = detail::random_isotropic_vector(k, rng);
      Vec<F> v = detail::random_perp_vector(k, rng, u);
      for (auto& row : w.basis) detail::apply_transvection(k, u, v, row);
    }
    if (!is_isotropic(k, w)) throw std::logic_error("sampler lost isotropy");
    return w;
  }

  const auto& c = *constraint;
  const int t = c.target_dim;
  if (t < 0 || t > 5)
    throw std::invalid_argument("target dimension must be between 0 and 5");
  if (!is_isotropic(k, c.meet))
    throw std::invalid_argument("constraint subspace is not maximal isotropic");
  if (c.family) {
    // the sample's family is forced: equal to W's family iff t is odd
    Parity forced = t % 2 == 1 ? family_of(k, c.meet) : opposite(family_of(k, c.meet));
    if (*c.family != forced)
      throw std::invalid_argument("incompatible parity/dimension request");
  }

  // random basis of W
  Mat<F> w_rows;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Mat<F> coeff(5, Vec<F>(5, k.zero()));
    for (auto& row : coeff)
      for (auto& x : row) x = k.random(rng);
    if (rank_of(k, coeff) != 5) continue;
    w_rows.assign(5, Vec<F>(10, k.zero()));
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j)
        for (size_t col = 0; col < 10; ++col)
          w_rows[i][col] =
              k.add(w_rows[i][col], k.mul(coeff[i][j], c.meet.basis[j][col]));
    break;
  }
  if (w_rows.empty()) throw std::logic_error("failed to draw an invertible matrix");

  // duals: b(w_i, u_j) = delta_ij, starting from particular solutions
  Mat<F> pairing_rows(5, Vec<F>(10, k.zero()));
  for (size_t i = 0; i < 5; ++i)
    for (size_t col = 0; col < 10; ++col)
      pairing_rows[i][col] = w_rows[i][col < 5 ? col + 5 : col - 5];
  Mat<F> u_rows;
  for (int j = 0; j < 5; ++j) {
    Vec<F> rhs(5, k.zero());
    rhs[static_cast<size_t>(j)] = k.one();
    auto sol = solve_particular(k, pairing_rows, rhs);
    if (!sol) throw std::logic_error("hyperbolic completion failed");
    // randomize within the fiber: shifts by W do not change the pairings
    for (size_t i = 0; i < 5; ++i) {
      auto r = k.random(rng);
      for (size_t col = 0; col < 10; ++col)
        (*sol)[col] = k.add((*sol)[col], k.mul(r, w_rows[i][col]));
    }
    u_rows.push_back(std::move(*sol));
  }
  // hyperbolic Gram-Schmidt: make the duals isotropic and orthogonal
  for (size_t j = 0; j < 5; ++j) {
    for (size_t i = 0; i < j; ++i) {
      auto b = bilinear_form(k, u_rows[j], u_rows[i]);
      for (size_t col = 0; col < 10; ++col)
        u_rows[j][col] = k.sub(u_rows[j][col], k.mul(b, w_rows[i][col]));
    }
    auto q = quadratic_form(k, u_rows[j]);
    for (size_t col = 0; col < 10; ++col)
      u_rows[j][col] = k.sub(u_rows[j][col], k.mul(q, w_rows[j][col]));
  }

  IsotropicSubspace<F> z{Mat<F>(5, Vec<F>(10, k.zero()))};
  for (int i = 0; i < t; ++i) z.basis[static_cast<size_t>(i)] = w_rows[static_cast<size_t>(i)];
  for (int i = t; i < 5; ++i) z.basis[static_cast<size_t>(i)] = u_rows[static_cast<size_t>(i)];

  // stabilizer transvections: u, v in W fix W pointwise and preserve q
  for (int step = 0; step < 15; ++step) {
    Vec<F> u(10, k.zero()), v(10, k.zero());
    for (size_t i = 0; i < 5; ++i) {
      auto a = k.random(rng);
      auto b = k.random(rng);
      for (size_t col = 0; col < 10; ++col) {
        u[col] = k.add(u[col], k.mul(a, w_rows[i][col]));
        v[col] = k.add(v[col], k.mul(b, w_rows[i][col]));
      }
    }
    for (auto& row : z.basis) detail::apply_transvection(k, u, v, row);
  }

  if (!is_isotropic(k, z)) throw std::logic_error("sampler lost isotropy");
  if (intersection_data(k, c.meet, z).dim != t)
    throw std::logic_error("sampler missed the intersection constraint");
  return z;
}

template <class F>
IsotropicSubspace<F> random_isotropic(const F& k, std::uint64_t seed,
                                      const IntersectionConstraint<F>& c) {
  return random_isotropic(k, seed, std::optional<IntersectionConstraint<F>>(c));
}

}  // namespace spinvar::clifford

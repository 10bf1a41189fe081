#pragma once

// Independent oracles used only by the test suites.  Everything here is a
// deliberately naive second route: Kostant's multiplicity formula with an
// explicit enumeration of the Weyl group, combinatorial rank formulas, and
// generating functions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "spinvar/weights.hpp"

namespace oracles {

using spinvar::weights::RootSystemD;
using spinvar::weights::Weight;

struct SignedPermutation {
  std::vector<int> perm;  // image of coordinate i
  std::uint32_t flips;    // bitmask of negated coordinates, even popcount
  int det;                // sign of perm (flips are even, so det = sgn(perm))
};

inline std::vector<SignedPermutation> weyl_group_d(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
    int det = inv % 2 == 0 ? 1 : -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      out.push_back({p, mask, det});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::int64_t> act(const SignedPermutation& w,
                                       const std::vector<std::int64_t>& d) {
  std::vector<std::int64_t> out(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    std::int64_t v = d[i];
    if (w.flips & (1u << i)) v = -v;
    out[static_cast<size_t>(w.perm[i])] = v;
  }
  return out;
}

// Kostant partition function on doubled vectors: number of ways to write v
// as a nonnegative integer combination of the positive roots.
class KostantPartition {
 public:
  explicit KostantPartition(const RootSystemD& rs) : rs_(rs) {}

  mpz_class count(const std::vector<std::int64_t>& twice_v) {
    return count_from(twice_v, 0);
  }

 private:
  // necessary condition for membership in the positive root cone
  static bool cone_feasible(const std::vector<std::int64_t>& d) {
    const size_t n = d.size();
    std::int64_t s = 0;
    for (size_t k = 0; k + 2 < n; ++k) {
      s += d[k];
      if (s < 0) return false;
    }
    std::int64_t s_n1 = s + d[n - 2];
    std::int64_t s_n = s_n1 + d[n - 1];
    return s_n1 - d[n - 1] >= 0 && s_n >= 0 && s_n % 2 == 0;
  }

  mpz_class count_from(std::vector<std::int64_t> v, size_t idx) {
    // v uses doubled coordinates; roots contribute +-2 per entry
    bool zero = std::all_of(v.begin(), v.end(),
                            [](std::int64_t x) { return x == 0; });
    if (zero) return 1;
    if (idx >= rs_.positive_roots().size()) return 0;
    std::vector<std::int64_t> halves(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] % 2 != 0) return 0;
      halves[i] = v[i] / 2;
    }
    if (!cone_feasible(halves)) return 0;
    auto key = std::make_pair(idx, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto& root = rs_.positive_roots()[idx];
    mpz_class total = 0;
    for (;;) {
      total += count_from(v, idx + 1);
      v[static_cast<size_t>(root.i)] -= 2;
      v[static_cast<size_t>(root.j)] -= 2 * root.sign;
      std::vector<std::int64_t> h(v.size());
      bool ok = true;
      for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] % 2 != 0) {
          ok = false;
          break;
        }
        h[i] = v[i] / 2;
      }
      if (!ok || !cone_feasible(h)) break;
    }
    memo_.emplace(key, total);
    return total;
  }

  const RootSystemD& rs_;
  std::map<std::pair<size_t, std::vector<std::int64_t>>, mpz_class> memo_;
};

// Kostant multiplicity formula: m_lambda(mu) = sum_w det(w) P(w(lambda+rho) - (mu+rho)).
class KostantMultiplicity {
 public:
  explicit KostantMultiplicity(const RootSystemD& rs)
      : rs_(rs), partition_(rs), group_(weyl_group_d(rs.rank())) {}

  mpz_class multiplicity(const Weight& lambda, const Weight& mu) {
    const auto& drho = rs_.rho().twice();
    std::vector<std::int64_t> lr(lambda.twice());
    std::vector<std::int64_t> mr(mu.twice());
    for (size_t i = 0; i < lr.size(); ++i) {
      lr[i] += drho[i];
      mr[i] += drho[i];
    }
    mpz_class total = 0;
    for (const auto& w : group_) {
      auto v = act(w, lr);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= mr[i];
      total += w.det * partition_.count(v);
    }
    return total;
  }

 private:
  const RootSystemD& rs_;
  KostantPartition partition_;
  std::vector<SignedPermutation> group_;
};

}  // namespace oracles

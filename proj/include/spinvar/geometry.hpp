#pragma once

// The randomized verification suites for the Clifford / pure-spinor layer,
// shared by the CLI and the acceptance tests.  Each suite runs a fixed
// number of seeded trials over Z/p and reports how many failed.

#include <cstdint>
#include <string>
#include <vector>

#include "spinvar/clifford.hpp"
#include "spinvar/rng.hpp"

namespace spinvar::geometry {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

struct SuiteConfig {
  std::uint64_t prime = 2305843009213693951ULL;  // 2^61 - 1
  std::uint64_t seed = 0;
  int trials = 100;
};

namespace detail {

using clifford::PrimeField;
using clifford::Parity;

inline clifford::Vec<PrimeField> random_vector10(const PrimeField& k, SplitMix64& rng) {
  clifford::Vec<PrimeField> v(10, k.zero());
  for (auto& c : v) c = k.random(rng);
  return v;
}

inline clifford::SpinorVector<PrimeField> random_spinor(const PrimeField& k,
                                                        SplitMix64& rng) {
  Parity p = rng.coin() ? Parity::even : Parity::odd;
  auto s = clifford::zero_spinor(k, p);
  for (unsigned m = 0; m < 32; ++m)
    if ((__builtin_popcount(m) % 2 ? Parity::odd : Parity::even) == p)
      s.coords[m] = k.random(rng);
  return s;
}

}  // namespace detail

// v.(v.s) = q(v) s
inline SuiteResult suite_clifford_relation(const SuiteConfig& cfg) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"clifford relation v.v.s = q(v)s", cfg.trials, 0};
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng(child_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    auto v = detail::random_vector10(k, rng);
    auto s = detail::random_spinor(k, rng);
    auto vvs = clifford_action(k, v, clifford_action(k, v, s));
    auto q = quadratic_form(k, v);
    bool good = true;
    for (unsigned m = 0; m < 32; ++m)
      if (vvs.coords[m] != k.mul(q, s.coords[m])) good = false;
    if (!good) ++r.failures;
  }
  return r;
}

// the parametrization lands in the zero locus of the ten quadrics
inline SuiteResult suite_omega_on_quadrics(const SuiteConfig& cfg) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"spinor_from_omega satisfies the quadrics", cfg.trials, 0};
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng(child_seed(cfg.seed ^ 0xabcdULL, static_cast<std::uint64_t>(t)));
    auto w = clifford::random_skew_form(k, rng);
    auto s = clifford::spinor_from_omega(k, w);
    for (const auto& res : clifford::quadric_residuals(k, s))
      if (!k.is_zero(res)) {
        ++r.failures;
        break;
      }
  }
  return r;
}

// pure_spinor(graph of omega) is projectively spinor_from_omega(omega)
inline SuiteResult suite_graph_consistency(const SuiteConfig& cfg) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"pure spinor of a graph matches the parametrization", cfg.trials, 0};
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng(child_seed(cfg.seed ^ 0x1111ULL, static_cast<std::uint64_t>(t)));
    auto w = clifford::random_skew_form(k, rng);
    auto expect = clifford::spinor_from_omega(k, w);
    auto got = clifford::pure_spinor(k, clifford::graph_subspace(k, w));
    // proportional: got is normalized with leading coordinate one and the
    // parametrization has omega_0 = 1, so they must be equal
    bool good = got.parity == clifford::Parity::even;
    for (unsigned m = 0; m < 32 && good; ++m)
      if (got.coords[m] != expect.coords[m]) good = false;
    if (!good) ++r.failures;
  }
  return r;
}

// same family <=> equal pure-spinor parity
inline SuiteResult suite_family_parity(const SuiteConfig& cfg) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"family parity matches intersection parity", cfg.trials, 0};
  for (int t = 0; t < cfg.trials; ++t) {
    std::uint64_t s1 = child_seed(cfg.seed ^ 0x2222ULL, static_cast<std::uint64_t>(2 * t));
    std::uint64_t s2 = child_seed(cfg.seed ^ 0x2222ULL, static_cast<std::uint64_t>(2 * t + 1));
    auto w1 = clifford::random_isotropic(k, s1);
    auto w2 = clifford::random_isotropic(k, s2);
    auto data = clifford::intersection_data(k, w1, w2);
    bool parity_equal = clifford::pure_spinor(k, w1).parity ==
                        clifford::pure_spinor(k, w2).parity;
    if (data.same_family != parity_equal) ++r.failures;
  }
  return r;
}

// quadrics vanish on every sampled even-family pure spinor
inline SuiteResult suite_quadrics_on_pure_spinors(const SuiteConfig& cfg) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"quadrics vanish on sampled pure spinors", cfg.trials, 0};
  for (int t = 0; t < cfg.trials; ++t) {
    std::uint64_t s = child_seed(cfg.seed ^ 0x3333ULL, static_cast<std::uint64_t>(t));
    auto w = clifford::random_isotropic(k, s);
    auto sp = clifford::pure_spinor(k, w);
    if (sp.parity != clifford::Parity::even) {
      // swapping e_5 <-> f_5 preserves the form and flips the family
      for (auto& row : w.basis) std::swap(row[4], row[9]);
      sp = clifford::pure_spinor(k, w);
    }
    if (sp.parity != clifford::Parity::even) {
      ++r.failures;
      continue;
    }
    for (const auto& res : clifford::quadric_residuals(k, sp))
      if (!k.is_zero(res)) {
        ++r.failures;
        break;
      }
  }
  return r;
}

// the tangency trichotomy: dimension criterion vs first-order pairing
// criterion on constructed instances of each class
inline SuiteResult suite_tangency(const SuiteConfig& cfg) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"tangency classes agree with the first-order criterion",
                3 * cfg.trials, 0};
  for (int t = 0; t < cfg.trials; ++t) {
    std::uint64_t base = child_seed(cfg.seed ^ 0x4444ULL, static_cast<std::uint64_t>(t));
    auto e = clifford::random_isotropic(k, base);
    for (int target : {0, 2, 4}) {
      clifford::IntersectionConstraint<clifford::PrimeField> c{e, target, std::nullopt};
      auto f = clifford::random_isotropic(
          k, child_seed(base, static_cast<std::uint64_t>(target + 1)), c);
      clifford::TangencyClass expect =
          target == 0 ? clifford::TangencyClass::generic
          : target == 2 ? clifford::TangencyClass::contains
                        : clifford::TangencyClass::tangent;
      try {
        // tangency_classify itself throws if the two criteria disagree
        if (clifford::tangency_classify(k, e, f) != expect) ++r.failures;
      } catch (const std::exception&) {
        ++r.failures;
      }
    }
  }
  return r;
}

// genericity: against a fixed frame, unconstrained samples rarely meet it
// in dimension >= 2
inline SuiteResult suite_genericity(const SuiteConfig& cfg, int samples = 1000,
                                    double threshold = 0.05) {
  clifford::PrimeField k(cfg.prime);
  SuiteResult r{"unconstrained samples are generic", samples, 0};
  auto e = clifford::coordinate_frame(k, 0);
  int bad = 0;
  for (int t = 0; t < samples; ++t) {
    auto w = clifford::random_isotropic(
        k, child_seed(cfg.seed ^ 0x5555ULL, static_cast<std::uint64_t>(t)));
    if (clifford::intersection_data(k, e, w).dim >= 2) ++bad;
  }
  if (bad > static_cast<int>(threshold * samples)) r.failures = bad;
  return r;
}

inline std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
  return {suite_clifford_relation(cfg), suite_omega_on_quadrics(cfg),
          suite_graph_consistency(cfg), suite_family_parity(cfg),
          suite_quadrics_on_pure_spinors(cfg), suite_tangency(cfg),
          suite_genericity(cfg)};
}

}  // namespace spinvar::geometry

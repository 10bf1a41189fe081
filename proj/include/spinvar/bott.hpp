#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "spinvar/weights.hpp"

namespace spinvar::bott {

using weights::IrreducibleModule;
using weights::Weight;

/*
  Cohomology of irreducible homogeneous bundles on the spinor variety
  S = Spin(2n)/P, together with the Levi-level (GL(n)) calculus that breaks
  composite constructions in U, U^vee and twists into irreducible bundles.

  An irreducible bundle is recorded by its highest weight, which is dominant
  for GL(n) only: c_1 >= ... >= c_n with no constraint on the sign of c_n.
  O_S(1) is the bundle of weight omega_n.
*/

struct BundleSpec {
  Weight weight;
  std::string name;

  explicit BundleSpec(Weight w, std::string display = "");
};

// Formal integer combination of irreducible bundles.
struct BundleExpression {
  std::vector<std::pair<mpz_class, BundleSpec>> terms;
};

BundleSpec line_bundle(int rank, std::int64_t t);  // O(t)
BundleSpec twist(const BundleSpec& b, std::int64_t t);
BundleSpec dual(const BundleSpec& b);
BundleExpression twist(const BundleExpression& e, std::int64_t t);

// rank of the irreducible GL(n)-representation with this highest weight
mpz_class gl_dimension(const Weight& w);
mpz_class levi_rank(const BundleExpression& e);

/*
  Bundle expression grammar:

    expr := term ('+' term)*
    term := [int '*'] atom ['(' int ')']
    atom := 'O' | 'U' | 'Ud'
          | 'wedge(' k ',' atom ')' | 'sym(' k ',' atom ')'
          | 'tensor(' atom ',' atom ')'

  A twist '(t)' tensors by O_S(t).  Parse errors carry the offending
  position.
*/
BundleExpression construct(std::string_view expr, int rank = 5);

// product of two expressions, decomposed into irreducibles
BundleExpression tensor(const BundleExpression& a, const BundleExpression& b);

struct CohomologyAnswer {
  bool acyclic = true;
  int degree = -1;
  std::optional<IrreducibleModule> module;  // engaged iff !acyclic
};

CohomologyAnswer bott_cohomology(const BundleSpec& b);

mpz_class euler_char_on_S(const BundleExpression& e);

// named bundle with the degrees that are required to vanish
struct FamilyEntry {
  std::string name;
  BundleSpec bundle;
  std::vector<int> required_zero;
};

struct VanishingRow {
  FamilyEntry entry;
  CohomologyAnswer answer;
  bool required_ok = true;
};

std::vector<FamilyEntry> deformation_family();  // T_S(-k), 0 <= k <= 8
std::vector<FamilyEntry> hoppe_family();
std::vector<VanishingRow> vanishing_report(const std::vector<FamilyEntry>& family);

// short display name for a Spin(2n)-module appearing as a cohomology group
std::string module_name(const IrreducibleModule& m);

std::string describe(const BundleSpec& b);
std::string describe(const CohomologyAnswer& a);

}  // namespace spinvar::bott

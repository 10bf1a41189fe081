#include "spinvar/motivic.hpp"

#include <sstream>
#include <stdexcept>

namespace spinvar::motivic {

MotivicPolynomial::MotivicPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  trim();
}

MotivicPolynomial MotivicPolynomial::monomial(int degree, mpz_class c) {
  std::vector<mpz_class> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = std::move(c);
  return MotivicPolynomial(std::move(v));
}

void MotivicPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

int MotivicPolynomial::degree() const {
  return static_cast<int>(coeffs_.size()) - 1;
}

bool MotivicPolynomial::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == 0;
}

mpz_class MotivicPolynomial::coefficient(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

mpz_class MotivicPolynomial::evaluate_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

MotivicPolynomial MotivicPolynomial::substitute_t_squared() const {
  std::vector<mpz_class> v(coeffs_.size() * 2 - 1, 0);
  for (size_t k = 0; k < coeffs_.size(); ++k) v[2 * k] = coeffs_[k];
  return MotivicPolynomial(std::move(v));
}

MotivicPolynomial& MotivicPolynomial::operator+=(const MotivicPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

MotivicPolynomial& MotivicPolynomial::operator-=(const MotivicPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

MotivicPolynomial operator*(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return MotivicPolynomial(std::move(v));
}

MotivicPolynomial MotivicPolynomial::operator-() const {
  auto v = coeffs_;
  for (auto& c : v) c = -c;
  return MotivicPolynomial(std::move(v));
}

std::string MotivicPolynomial::coefficient_list() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].get_str();
  }
  os << "]";
  return os.str();
}

std::string MotivicPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    mpz_class a = first ? c : mpz_class(abs(c));
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

mpz_class strict_partition_count(std::int64_t k, std::int64_t max_part) {
  if (k < 0) return 0;
  if (max_part < 0) max_part = 0;
  // coefficient of t^k in prod_{j=1..max_part} (1 + t^j)
  std::vector<mpz_class> dp(static_cast<size_t>(k) + 1, 0);
  dp[0] = 1;
  for (std::int64_t j = 1; j <= max_part; ++j)
    for (std::int64_t i = k; i >= j; --i)
      dp[static_cast<size_t>(i)] += dp[static_cast<size_t>(i - j)];
  return dp[static_cast<size_t>(k)];
}

MotivicPolynomial poincare_S() {
  // Betti numbers b_{2k} count strict partitions of k with parts < 5
  std::vector<mpz_class> b;
  for (int k = 0; k <= 10; ++k) b.push_back(strict_partition_count(k, 4));
  MotivicPolynomial p{b};
  // closed product form (1 + t^3)(1 + t + ... + t^7)
  MotivicPolynomial cube{{1, 0, 0, 1}};
  MotivicPolynomial seg{std::vector<mpz_class>(8, 1)};
  if (p != cube * seg)
    throw std::logic_error(
        "Poincare polynomial of S: partition count and product form disagree");
  return p;
}

std::pair<MotivicPolynomial, MotivicPolynomial> hyperplane_section_classes() {
  MotivicPolynomial ps = poincare_S();
  // the singular section carries every cell of S except the big one
  MotivicPolynomial sing = ps - MotivicPolynomial::monomial(10);
  // the smooth section is horospherical with one less 7-cell
  MotivicPolynomial reg = sing - MotivicPolynomial::monomial(7);
  return {sing, reg};
}

std::string to_string(BaseSymbol s) {
  switch (s) {
    case BaseSymbol::X: return "[X]";
    case BaseSymbol::Y: return "[Y]";
    case BaseSymbol::S: return "[S]";
    case BaseSymbol::S_dual: return "[S^v]";
  }
  return "?";
}

FibrationDecomposition& FibrationDecomposition::add(BaseSymbol s,
                                                    const MotivicPolynomial& p) {
  auto it = parts.find(s);
  if (it == parts.end())
    parts.emplace(s, p);
  else {
    it->second += p;
    if (it->second.is_zero()) parts.erase(it);
  }
  return *this;
}

std::string FibrationDecomposition::to_string() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, p] : parts) {
    if (!first) os << " + ";
    first = false;
    os << motivic::to_string(sym) << "*(" << p.to_string() << ")";
  }
  return os.str();
}

LEquivalence derive_L_equivalence() {
  auto [sing, reg] = hyperplane_section_classes();
  return derive_L_equivalence(sing, reg);
}

LEquivalence derive_L_equivalence(const MotivicPolynomial& sing,
                                  const MotivicPolynomial& reg) {
  LEquivalence out;
  // [Q] = [Y][HS_sing] + [S2^v - Y][HS_reg]
  out.q_via_second_projection.add(BaseSymbol::Y, sing);
  out.q_via_second_projection.add(BaseSymbol::S_dual, reg);
  out.q_via_second_projection.add(BaseSymbol::Y, -reg);
  // [Q] = [X][HS_sing] + [S1 - X][HS_reg]
  out.q_via_first_projection.add(BaseSymbol::X, sing);
  out.q_via_first_projection.add(BaseSymbol::S, reg);
  out.q_via_first_projection.add(BaseSymbol::X, -reg);

  // subtract; [S] and [S^v] are classes of isomorphic varieties and cancel
  std::map<BaseSymbol, MotivicPolynomial> diff;
  auto accumulate = [&](const FibrationDecomposition& d, int sign) {
    for (const auto& [sym, p] : d.parts) {
      BaseSymbol key = sym == BaseSymbol::S_dual ? BaseSymbol::S : sym;
      auto it = diff.find(key);
      if (it == diff.end()) it = diff.emplace(key, MotivicPolynomial{}).first;
      if (sign > 0)
        it->second += p;
      else
        it->second -= p;
    }
  };
  accumulate(out.q_via_first_projection, +1);
  accumulate(out.q_via_second_projection, -1);

  auto coeff_of = [&](BaseSymbol s) {
    auto it = diff.find(s);
    return it == diff.end() ? MotivicPolynomial{} : it->second;
  };
  if (!coeff_of(BaseSymbol::S).is_zero())
    throw std::runtime_error("difference does not cancel the base classes: " +
                             coeff_of(BaseSymbol::S).to_string());
  MotivicPolynomial cx = coeff_of(BaseSymbol::X);
  MotivicPolynomial cy = coeff_of(BaseSymbol::Y);
  if (!(cx + cy).is_zero())
    throw std::runtime_error("difference does not factor: [X]*(" +
                             cx.to_string() + ") + [Y]*(" + cy.to_string() + ")");
  if (cx.is_zero()) {
    out.trivial = true;
    out.factor = MotivicPolynomial{};
    out.x_coefficient = 0;
    return out;
  }
  // normalize the sign so the leading coefficient of the factor is positive
  if (cx.coefficient(cx.degree()) > 0) {
    out.factor = cx;
    out.x_coefficient = 1;
  } else {
    out.factor = -cx;
    out.x_coefficient = -1;
  }
  return out;
}

std::string LEquivalence::identity() const {
  if (trivial) return "0 = 0";
  std::string lead = x_coefficient > 0 ? "([X]-[Y])" : "([Y]-[X])";
  std::string f = factor.to_string();
  bool monomial_factor = true;
  int nonzero = 0;
  for (int k = 0; k <= factor.degree(); ++k)
    if (factor.coefficient(k) != 0) ++nonzero;
  monomial_factor = nonzero == 1 && factor.coefficient(factor.degree()) == 1;
  if (!monomial_factor) f = "(" + f + ")";
  return lead + "*" + f + " = 0";
}

}  // namespace spinvar::motivic

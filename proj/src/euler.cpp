#include "spinvar/euler.hpp"

#include <sstream>
#include <stdexcept>

namespace spinvar::euler {

namespace {

// the resolution of O_X as an O_S-module: multiplicity space, its dimension,
// and the twist of each term
struct ResolutionTerm {
  const char* module;
  int multiplicity;
  int twist;
};

constexpr ResolutionTerm kResolution[6] = {
    {"O", 1, 0},         {"V10", 10, -2}, {"Delta", 16, -3},
    {"Delta_dual", 16, -5}, {"V10", 10, -6}, {"O", 1, -8},
};

mpz_class falling_product(std::int64_t k) {
  // (k+1)(k+2)(k+3)^2(k+4)^2(k+5)^2(k+6)(k+7)
  static const int roots[10] = {1, 2, 3, 3, 4, 4, 5, 5, 6, 7};
  mpz_class p = 1;
  for (int r : roots) p *= mpz_class(static_cast<long>(k + r));
  return p;
}

const mpz_class kHilbertDenominator = 302400;  // 2^6 3^3 5^2 7

mpz_class exact_div(const mpz_class& num, const mpz_class& den,
                    const char* what) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error(std::string(what) + " not integral");
  return q;
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(mpq_class(0));
  for (std::int64_t k = -20; k <= 20; ++k) {
    mpq_class v = evaluate(mpq_class(static_cast<long>(k)));
    if (v.get_den() != 1)
      throw std::invalid_argument("polynomial is not integer-valued at " +
                                  std::to_string(k));
  }
}

mpq_class IntegerPolynomial::leading_coefficient() const {
  return coeffs_.back();
}

mpq_class IntegerPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

mpz_class IntegerPolynomial::evaluate_at_integer(std::int64_t k) const {
  mpq_class v = evaluate(mpq_class(static_cast<long>(k)));
  if (v.get_den() != 1) throw std::logic_error("non-integer value");
  return v.get_num();
}

std::string IntegerPolynomial::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpq_class& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0 && degree() > 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    mpq_class a = first ? c : mpq_class(abs(c));
    first = false;
    if (d == 0 || a != 1) os << a.get_str();
    if (d > 0) {
      if (a != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

mpz_class hilbert_S(std::int64_t k) {
  return exact_div(falling_product(k), kHilbertDenominator, "H_S");
}

IntegerPolynomial hilbert_S_polynomial() {
  static const int roots[10] = {1, 2, 3, 3, 4, 4, 5, 5, 6, 7};
  std::vector<mpz_class> c{1};
  for (int r : roots) {
    c.push_back(0);
    for (size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] + r * c[i];
    c[0] *= r;
  }
  std::vector<mpq_class> q;
  q.reserve(c.size());
  for (const auto& a : c) q.emplace_back(mpq_class(a) / kHilbertDenominator);
  return IntegerPolynomial(std::move(q));
}

mpz_class hilbert_X(std::int64_t k) {
  // alternating sum over the resolution
  mpz_class via_resolution = hilbert_S(k) - 10 * hilbert_S(k - 2) +
                             16 * hilbert_S(k - 3) - 16 * hilbert_S(k - 5) +
                             10 * hilbert_S(k - 6) - hilbert_S(k - 8);
  mpz_class kk(static_cast<long>(k));
  mpz_class closed =
      exact_div(2 * kk * (kk * kk + 1) * (3 * kk * kk + 17), 5, "H_X");
  if (via_resolution != closed)
    throw std::logic_error("Hilbert polynomial of X: resolution and closed "
                           "form disagree at k = " + std::to_string(k));
  return closed;
}

mpz_class koszul_euler_on_X(const BundleExpression& e) {
  // N^vee = U^vee(-2), so the j-th Koszul term is wedge(j, Ud)(-2j)
  mpz_class total = 0;
  for (int j = 0; j <= 5; ++j) {
    BundleExpression kj = bott::twist(
        bott::construct("wedge(" + std::to_string(j) + ",Ud)"), -2 * j);
    mpz_class chi = bott::euler_char_on_S(bott::tensor(e, kj));
    total += (j % 2 == 0) ? chi : -chi;
  }
  return total;
}

std::int64_t HodgeTable::chi_top() const {
  std::int64_t total = 0;
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      std::int64_t v = h[static_cast<size_t>(p)][static_cast<size_t>(q)];
      total += ((p + q) % 2 == 0) ? v : -v;
    }
  return total;
}

bool HodgeTable::symmetric() const {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      if (h[static_cast<size_t>(p)][static_cast<size_t>(q)] !=
          h[static_cast<size_t>(q)][static_cast<size_t>(p)])
        return false;
      if (h[static_cast<size_t>(p)][static_cast<size_t>(q)] !=
          h[static_cast<size_t>(5 - p)][static_cast<size_t>(5 - q)])
        return false;
    }
  return true;
}

HodgeTable hodge_numbers_X() {
  // chi(Omega_X) from the conormal sequence of X in S
  mpz_class chi1 =
      koszul_euler_on_X(bott::construct("wedge(2,U) + -1*Ud(-2)"));
  // chi(Omega^2_X) from the skew square of the conormal sequence
  mpz_class chi2 = koszul_euler_on_X(bott::construct(
      "wedge(2,wedge(2,U)) + -1*tensor(wedge(2,U),Ud)(-2) + sym(2,Ud)(-4)"));

  mpz_class h14 = 1 + chi1;
  mpz_class h23 = 1 - chi2;
  if (!h14.fits_slong_p() || !h23.fits_slong_p())
    throw std::logic_error("unexpected Hodge number magnitude");

  HodgeTable t;
  for (int p = 0; p <= 5; ++p) t.h[static_cast<size_t>(p)][static_cast<size_t>(p)] = 1;
  t.h[0][5] = t.h[5][0] = 1;
  t.h[1][4] = t.h[4][1] = h14.get_si();
  t.h[2][3] = t.h[3][2] = h23.get_si();
  if (!t.symmetric()) throw std::logic_error("Hodge table asymmetry");
  return t;
}

RestrictionCohomology cohomology_on_X(const BundleSpec& b) {
  RestrictionCohomology out;
  for (int j = 0; j < 6; ++j) {
    const auto& term = kResolution[j];
    auto ans = bott::bott_cohomology(bott::twist(b, term.twist));
    if (ans.acyclic) continue;
    PageEntry e;
    e.column = j;
    e.term = term.twist == 0
                 ? std::string(term.module)
                 : std::string(term.module) + "(" + std::to_string(term.twist) + ")";
    e.q = ans.degree;
    e.dimension = ans.module->dimension * term.multiplicity;
    out.page.push_back(std::move(e));
  }
  // degeneration is forced when no differential can connect two entries:
  // d_r moves (column, q) to (column - r, q - r + 1) for r >= 1
  for (const auto& a : out.page)
    for (const auto& bentry : out.page) {
      int r = a.column - bentry.column;
      if (r >= 1 && bentry.q == a.q - r + 1) return out;  // not forced
    }
  out.exact = true;
  for (const auto& e : out.page) {
    int d = e.total_degree();
    if (d < 0 || d > 5)
      throw std::logic_error("resolution cohomology outside 0..5");
    out.h[static_cast<size_t>(d)] += e.dimension;
  }
  return out;
}

}  // namespace spinvar::euler

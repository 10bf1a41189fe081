#include "spinvar/bott.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinvar::bott {

namespace {

using CharMap = std::map<std::vector<std::int64_t>, mpz_class>;

void add_to(CharMap& acc, const std::vector<std::int64_t>& w, const mpz_class& c) {
  auto it = acc.find(w);
  if (it == acc.end()) {
    if (c != 0) acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

// total number of basis items, with a guard against runaway constructions
std::size_t item_count(const CharMap& ch) {
  mpz_class total = 0;
  for (const auto& [w, m] : ch) total += m;
  if (total < 0 || total > 200000)
    throw std::invalid_argument("construction too large");
  return static_cast<std::size_t>(total.get_ui());
}

std::vector<const std::vector<std::int64_t>*> expand_items(const CharMap& ch) {
  std::vector<const std::vector<std::int64_t>*> items;
  items.reserve(item_count(ch));
  for (const auto& [w, m] : ch)
    for (mpz_class i = 0; i < m; ++i) items.push_back(&w);
  return items;
}

double log_binomial(std::size_t n, std::size_t k) {
  double s = 0;
  for (std::size_t i = 0; i < k; ++i)
    s += std::log2(static_cast<double>(n - i)) - std::log2(static_cast<double>(i + 1));
  return s;
}

CharMap wedge_char(const CharMap& ch, std::int64_t k, int rank) {
  if (k < 0) throw std::invalid_argument("negative wedge power");
  CharMap out;
  if (k == 0) {
    out.emplace(std::vector<std::int64_t>(static_cast<size_t>(rank), 0), 1);
    return out;
  }
  auto items = expand_items(ch);
  const std::size_t n = items.size();
  if (static_cast<std::size_t>(k) > n) return out;  // zero bundle
  if (log_binomial(n, static_cast<std::size_t>(k)) > 22)
    throw std::invalid_argument("construction too large");
  std::vector<std::size_t> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<std::int64_t> w(static_cast<size_t>(rank), 0);
    for (auto i : idx)
      for (size_t c = 0; c < w.size(); ++c) w[c] += (*items[i])[c];
    add_to(out, w, 1);
    // next k-combination
    std::size_t j = static_cast<size_t>(k);
    while (j > 0 && idx[j - 1] == n - (static_cast<size_t>(k) - (j - 1))) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t l = j; l < static_cast<size_t>(k); ++l) idx[l] = idx[l - 1] + 1;
  }
  return out;
}

CharMap sym_char(const CharMap& ch, std::int64_t k, int rank) {
  if (k < 0) throw std::invalid_argument("negative symmetric power");
  CharMap out;
  if (k == 0) {
    out.emplace(std::vector<std::int64_t>(static_cast<size_t>(rank), 0), 1);
    return out;
  }
  auto items = expand_items(ch);
  const std::size_t n = items.size();
  if (n == 0) return out;
  if (log_binomial(n + static_cast<size_t>(k) - 1, static_cast<size_t>(k)) > 22)
    throw std::invalid_argument("construction too large");
  std::vector<std::size_t> idx(static_cast<size_t>(k), 0);  // weakly increasing
  for (;;) {
    std::vector<std::int64_t> w(static_cast<size_t>(rank), 0);
    for (auto i : idx)
      for (size_t c = 0; c < w.size(); ++c) w[c] += (*items[i])[c];
    add_to(out, w, 1);
    std::size_t j = static_cast<size_t>(k);
    while (j > 0 && idx[j - 1] == n - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t l = j; l < static_cast<size_t>(k); ++l) idx[l] = idx[j - 1];
  }
  return out;
}

CharMap tensor_char(const CharMap& a, const CharMap& b) {
  CharMap out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      std::vector<std::int64_t> w(wa.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      add_to(out, w, ma * mb);
    }
  return out;
}

CharMap twist_char(CharMap ch, std::int64_t t) {
  CharMap out;
  for (auto& [w, m] : ch) {
    auto v = w;
    for (auto& c : v) c += t;
    out.emplace(std::move(v), m);
  }
  return out;
}

// Character of the irreducible GL(n) representation of highest weight hw
// (doubled eps-coordinates), by Gelfand-Tsetlin pattern enumeration.
CharMap gl_irrep_char_uncached(const std::vector<std::int64_t>& hw) {
  const int n = static_cast<int>(hw.size());
  for (int i = 0; i + 1 < n; ++i)
    if (hw[static_cast<size_t>(i)] < hw[static_cast<size_t>(i) + 1])
      throw std::invalid_argument("highest weight is not GL-dominant");
  const std::int64_t shift = hw[static_cast<size_t>(n) - 1];
  std::vector<std::int64_t> part(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) part[static_cast<size_t>(i)] = (hw[static_cast<size_t>(i)] - shift) / 2;

  CharMap out;
  std::vector<std::vector<std::int64_t>> rows(static_cast<size_t>(n));
  rows[0] = part;  // rows[i] has n-i entries
  auto rec = [&](auto&& self, int level) -> void {
    if (level == n) {
      // weight coordinate k: |row of length k| - |row of length k-1|
      std::vector<std::int64_t> w(static_cast<size_t>(n));
      std::int64_t prev = 0;
      for (int k = 1; k <= n; ++k) {
        const auto& row = rows[static_cast<size_t>(n - k)];
        std::int64_t s = std::accumulate(row.begin(), row.end(), std::int64_t{0});
        w[static_cast<size_t>(k - 1)] = 2 * (s - prev) + shift;
        prev = s;
      }
      add_to(out, w, 1);
      return;
    }
    const auto& upper = rows[static_cast<size_t>(level) - 1];
    auto& row = rows[static_cast<size_t>(level)];
    row.assign(upper.size() - 1, 0);
    auto fill = [&](auto&& fself, size_t i) -> void {
      if (i == row.size()) {
        self(self, level + 1);
        return;
      }
      for (std::int64_t v = upper[i]; v >= upper[i + 1]; --v) {
        row[i] = v;
        fself(fself, i + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec, 1);
  return out;
}

std::mutex g_char_mutex;
std::map<std::vector<std::int64_t>, CharMap> g_char_cache;

CharMap gl_irrep_char(const std::vector<std::int64_t>& hw) {
  {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    auto it = g_char_cache.find(hw);
    if (it != g_char_cache.end()) return it->second;
  }
  CharMap ch = gl_irrep_char_uncached(hw);
  std::lock_guard<std::mutex> lock(g_char_mutex);
  g_char_cache.emplace(hw, ch);
  return ch;
}

// Iteratively strip highest weights.  The lexicographically largest weight
// of a genuine GL(n) character is dominance-maximal, hence a highest weight.
std::vector<std::pair<mpz_class, std::vector<std::int64_t>>> decompose_char(CharMap ch) {
  std::vector<std::pair<mpz_class, std::vector<std::int64_t>>> out;
  int guard = 0;
  while (!ch.empty()) {
    if (++guard > 100000) throw std::logic_error("character decomposition diverged");
    auto last = std::prev(ch.end());
    std::vector<std::int64_t> hw = last->first;
    mpz_class c = last->second;
    for (size_t i = 0; i + 1 < hw.size(); ++i)
      if (hw[i] < hw[i + 1])
        throw std::logic_error("maximal weight not GL-dominant");
    for (const auto& [w, m] : gl_irrep_char(hw)) add_to(ch, w, -c * m);
    out.emplace_back(c, hw);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

std::string bundle_label(const Weight& w) {
  const auto& d = w.twice();
  const int n = w.rank();
  bool constant = std::all_of(d.begin(), d.end(), [&](auto x) { return x == d[0]; });
  if (constant) {
    if (d[0] == 0) return "O";
    return "O(" + std::to_string(d[0]) + ")";
  }
  std::ostringstream os;
  os << "E[";
  for (int i = 0; i < n; ++i) {
    if (i) os << ",";
    if (d[static_cast<size_t>(i)] % 2 == 0)
      os << d[static_cast<size_t>(i)] / 2;
    else
      os << d[static_cast<size_t>(i)] << "/2";
  }
  os << "]";
  return os.str();
}

}  // namespace

BundleSpec::BundleSpec(Weight w, std::string display)
    : weight(std::move(w)), name(std::move(display)) {
  if (!weight.is_gl_dominant())
    throw std::invalid_argument(
        "bundle weight must be GL-dominant (c_1 >= ... >= c_n)");
  if (name.empty()) name = bundle_label(weight);
}

BundleSpec line_bundle(int rank, std::int64_t t) {
  return BundleSpec(Weight(std::vector<std::int64_t>(static_cast<size_t>(rank), t)));
}

BundleSpec twist(const BundleSpec& b, std::int64_t t) {
  auto d = b.weight.twice();
  for (auto& c : d) c += t;
  std::string nm = t == 0 ? b.name : b.name + "(" + std::to_string(t) + ")";
  return BundleSpec(Weight(std::move(d)), nm);
}

BundleSpec dual(const BundleSpec& b) {
  auto d = b.weight.twice();
  std::reverse(d.begin(), d.end());
  for (auto& c : d) c = -c;
  return BundleSpec(Weight(std::move(d)));
}

BundleExpression twist(const BundleExpression& e, std::int64_t t) {
  BundleExpression out;
  for (const auto& [c, b] : e.terms) out.terms.emplace_back(c, twist(b, t));
  return out;
}

mpz_class gl_dimension(const Weight& w) {
  // hook content formula via the Weyl formula for GL(n)
  const auto& d = w.twice();
  const int n = w.rank();
  if (!w.is_gl_dominant()) throw std::invalid_argument("not GL-dominant");
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= (d[static_cast<size_t>(i)] - d[static_cast<size_t>(j)]) / 2 + (j - i);
      den *= j - i;
    }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("GL dimension not integral");
  return q;
}

mpz_class levi_rank(const BundleExpression& e) {
  mpz_class total = 0;
  for (const auto& [c, b] : e.terms) total += c * gl_dimension(b.weight);
  return total;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  int rank;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }

  bool peek_int() {
    skip_ws();
    std::size_t p = pos;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected construction name");
    return std::string(s.substr(start, pos - start));
  }

  CharMap parse_atom() {
    std::string name = parse_name();
    if (name == "O") {
      CharMap ch;
      ch.emplace(std::vector<std::int64_t>(static_cast<size_t>(rank), 0), 1);
      return ch;
    }
    if (name == "U" || name == "Ud") {
      CharMap ch;
      for (int i = 0; i < rank; ++i) {
        std::vector<std::int64_t> w(static_cast<size_t>(rank), 0);
        w[static_cast<size_t>(i)] = name == "U" ? -2 : 2;
        ch.emplace(std::move(w), 1);
      }
      return ch;
    }
    if (name == "wedge" || name == "sym") {
      expect('(');
      std::int64_t k = parse_int();
      expect(',');
      CharMap inner = parse_atom();
      expect(')');
      return name == "wedge" ? wedge_char(inner, k, rank) : sym_char(inner, k, rank);
    }
    if (name == "tensor") {
      expect('(');
      CharMap a = parse_atom();
      expect(',');
      CharMap b = parse_atom();
      expect(')');
      return tensor_char(a, b);
    }
    pos -= name.size();
    fail("unsupported construction '" + name + "'");
  }

  // term := [int '*'] atom ['(' int ')']
  std::pair<mpz_class, CharMap> parse_term() {
    skip_ws();
    mpz_class coeff = 1;
    if (peek_int()) {
      coeff = static_cast<long>(parse_int());
      expect('*');
    }
    CharMap ch = parse_atom();
    skip_ws();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      std::int64_t t = parse_int();
      expect(')');
      ch = twist_char(std::move(ch), t);
    }
    return {coeff, ch};
  }
};

}  // namespace

BundleExpression construct(std::string_view expr, int rank) {
  Parser p{expr, 0, rank};
  std::map<Weight, mpz_class> acc;
  for (;;) {
    auto [coeff, ch] = p.parse_term();
    for (const auto& [c, hw] : decompose_char(std::move(ch)))
      acc[Weight(hw)] += coeff * c;
    p.skip_ws();
    if (p.pos == p.s.size()) break;
    p.expect('+');
  }
  BundleExpression out;
  for (const auto& [w, c] : acc)
    if (c != 0) out.terms.emplace_back(c, BundleSpec(w));
  return out;
}

BundleExpression tensor(const BundleExpression& a, const BundleExpression& b) {
  std::map<Weight, mpz_class> acc;
  for (const auto& [ca, ba] : a.terms)
    for (const auto& [cb, bb] : b.terms) {
      CharMap prod = tensor_char(gl_irrep_char(ba.weight.twice()),
                                 gl_irrep_char(bb.weight.twice()));
      for (const auto& [c, hw] : decompose_char(std::move(prod)))
        acc[Weight(hw)] += ca * cb * c;
    }
  BundleExpression out;
  for (const auto& [w, c] : acc)
    if (c != 0) out.terms.emplace_back(c, BundleSpec(w));
  return out;
}

// ---------------------------------------------------------------------------
// Bott's algorithm

CohomologyAnswer bott_cohomology(const BundleSpec& b) {
  weights::RootSystemD rs(b.weight.rank());
  Weight shifted = b.weight + rs.rho();
  auto conj = weights::dominant_conjugate(rs, shifted);
  if (conj.singular) return CohomologyAnswer{};
  Weight hw = conj.weight - rs.rho();
  CohomologyAnswer ans;
  ans.acyclic = false;
  ans.degree = conj.length;
  ans.module = weights::make_module(rs, hw);
  return ans;
}

mpz_class euler_char_on_S(const BundleExpression& e) {
  mpz_class total = 0;
  for (const auto& [c, b] : e.terms) {
    auto ans = bott_cohomology(b);
    if (ans.acyclic) continue;
    mpz_class contrib = c * ans.module->dimension;
    if (ans.degree % 2 != 0) contrib = -contrib;
    total += contrib;
  }
  return total;
}

// ---------------------------------------------------------------------------
// built-in families

std::vector<FamilyEntry> deformation_family() {
  std::vector<FamilyEntry> fam;
  BundleExpression ts = construct("wedge(2,Ud)");
  if (ts.terms.size() != 1) throw std::logic_error("T_S should be irreducible");
  const BundleSpec& tangent = ts.terms[0].second;
  for (int k = 0; k <= 8; ++k) {
    FamilyEntry e{k == 0 ? "T_S" : "T_S(-" + std::to_string(k) + ")",
                  twist(tangent, -k),
                  {}};
    if (k == 0) {
      e.required_zero = {1};
    } else if (k < 8) {
      for (int q = 2; q <= 10; ++q) e.required_zero.push_back(q);
    } else {
      e.required_zero = {6};
    }
    e.bundle.name = e.name;
    fam.push_back(std::move(e));
  }
  return fam;
}

std::vector<FamilyEntry> hoppe_family() {
  auto single = [](const char* expr) {
    BundleExpression e = construct(expr);
    if (e.terms.size() != 1) throw std::logic_error("expected irreducible bundle");
    return e.terms[0].second;
  };
  std::vector<FamilyEntry> fam;
  fam.push_back({"Ud(-1)", single("Ud(-1)"), {0}});
  fam.push_back({"wedge(2,Ud)(-1)", single("wedge(2,Ud)(-1)"), {0}});
  fam.push_back({"wedge(3,Ud)(-2)", single("wedge(3,Ud)(-2)"), {0}});
  fam.push_back({"wedge(4,Ud)(-2)", single("wedge(4,Ud)(-2)"), {0}});
  for (auto& e : fam) e.bundle.name = e.name;
  return fam;
}

std::vector<VanishingRow> vanishing_report(const std::vector<FamilyEntry>& family) {
  std::vector<VanishingRow> rows;
  for (const auto& e : family) {
    VanishingRow row{e, bott_cohomology(e.bundle), true};
    if (!row.answer.acyclic)
      row.required_ok =
          std::find(e.required_zero.begin(), e.required_zero.end(),
                    row.answer.degree) == e.required_zero.end();
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// display

std::string module_name(const IrreducibleModule& m) {
  const Weight& w = m.highest_weight;
  const int n = w.rank();
  if (w.is_zero()) return "trivial";
  if (n == 5) {
    if (w == Weight::fundamental(5, 1)) return "V10";
    if (w == Weight::fundamental(5, 4)) return "Delta";
    if (w == Weight::fundamental(5, 5)) return "Delta_dual";
  }
  return "V(" + format_fund(w) + ")";
}

std::string describe(const BundleSpec& b) {
  return b.name + " <hw " + format_eps(b.weight) + ">";
}

std::string describe(const CohomologyAnswer& a) {
  if (a.acyclic) return "acyclic";
  std::ostringstream os;
  os << "H^" << a.degree << " = " << module_name(*a.module) << ", dim "
     << a.module->dimension.get_str();
  return os.str();
}

}  // namespace spinvar::bott

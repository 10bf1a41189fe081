#include "spinvar/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace spinvar::weights {

namespace {

std::string bad_parity_message() {
  return "weight coordinates must be all integers or all half-integers";
}

}  // namespace

Weight::Weight(std::vector<std::int64_t> twice_coords)
    : twice_(std::move(twice_coords)) {
  if (twice_.empty()) throw std::invalid_argument("weight of rank 0");
  const std::int64_t parity = ((twice_[0] % 2) + 2) % 2;
  for (std::int64_t d : twice_) {
    if ((((d % 2) + 2) % 2) != parity)
      throw std::invalid_argument(bad_parity_message());
  }
}

Weight Weight::zero(int rank) {
  return Weight(std::vector<std::int64_t>(static_cast<size_t>(rank), 0));
}

Weight Weight::from_fundamental(const std::vector<std::int64_t>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<std::int64_t> d(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n - 2; ++i)
    for (int k = 0; k < i; ++k) d[static_cast<size_t>(k)] += 2 * coeffs[static_cast<size_t>(i - 1)];
  // omega_{n-1} = (eps_1 + ... + eps_{n-1} - eps_n)/2
  for (int k = 0; k < n; ++k)
    d[static_cast<size_t>(k)] += (k == n - 1 ? -1 : 1) * coeffs[static_cast<size_t>(n - 2)];
  // omega_n = (eps_1 + ... + eps_n)/2
  for (int k = 0; k < n; ++k) d[static_cast<size_t>(k)] += coeffs[static_cast<size_t>(n - 1)];
  return Weight(std::move(d));
}

Weight Weight::fundamental(int rank, int i) {
  std::vector<std::int64_t> a(static_cast<size_t>(rank), 0);
  a.at(static_cast<size_t>(i - 1)) = 1;
  return from_fundamental(a);
}

Weight Weight::eps(int rank, int i) {
  std::vector<std::int64_t> d(static_cast<size_t>(rank), 0);
  d.at(static_cast<size_t>(i - 1)) = 2;
  return Weight(std::move(d));
}

bool Weight::is_zero() const {
  return std::all_of(twice_.begin(), twice_.end(),
                     [](std::int64_t d) { return d == 0; });
}

bool Weight::is_dominant() const {
  const size_t n = twice_.size();
  for (size_t i = 0; i + 2 < n; ++i)
    if (twice_[i] < twice_[i + 1]) return false;
  return twice_[n - 2] >= std::abs(twice_[n - 1]);
}

bool Weight::is_gl_dominant() const {
  for (size_t i = 0; i + 1 < twice_.size(); ++i)
    if (twice_[i] < twice_[i + 1]) return false;
  return true;
}

bool Weight::is_integral() const { return twice_[0] % 2 == 0; }

std::vector<std::int64_t> Weight::fundamental_coords() const {
  const size_t n = twice_.size();
  std::vector<std::int64_t> a(n);
  for (size_t i = 0; i + 1 < n; ++i) a[i] = (twice_[i] - twice_[i + 1]) / 2;
  a[n - 1] = (twice_[n - 2] + twice_[n - 1]) / 2;
  return a;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("rank mismatch");
  for (size_t i = 0; i < twice_.size(); ++i) twice_[i] += o.twice_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("rank mismatch");
  for (size_t i = 0; i < twice_.size(); ++i) twice_[i] -= o.twice_[i];
  return *this;
}

Weight operator*(std::int64_t c, Weight a) {
  for (auto& d : a.twice_) d *= c;
  return a;
}

Weight Weight::operator-() const { return -1 * (*this); }

// ---------------------------------------------------------------------------
// parsing / printing

namespace {

std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("weight must be fund:[...] or eps:[...]");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto lb = rest.find('[');
  auto rb = rest.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw std::invalid_argument("weight must be fund:[...] or eps:[...]");
  auto items = split_list(rest.substr(lb + 1, rb - lb - 1));
  if (kind == "fund") {
    std::vector<std::int64_t> a;
    for (auto& it : items) a.push_back(parse_int(it));
    return Weight::from_fundamental(a);
  }
  if (kind == "eps") {
    std::vector<std::int64_t> d;
    for (auto& it : items) {
      auto slash = it.find('/');
      if (slash == std::string::npos) {
        d.push_back(2 * parse_int(it));
      } else {
        std::int64_t num = parse_int(it.substr(0, slash));
        std::int64_t den = parse_int(it.substr(slash + 1));
        if (den == 1)
          d.push_back(2 * num);
        else if (den == 2)
          d.push_back(num);
        else
          throw std::invalid_argument(
              "eps coordinates must have denominator 1 or 2");
      }
    }
    return Weight(std::move(d));
  }
  throw std::invalid_argument("unknown weight basis '" + kind + "'");
}

std::string format_eps(const Weight& w) {
  std::ostringstream os;
  os << "eps:[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ",";
    std::int64_t d = w.twice_at(i);
    if (d % 2 == 0)
      os << d / 2;
    else
      os << d << "/2";
  }
  os << "]";
  return os.str();
}

std::string format_fund(const Weight& w) {
  std::ostringstream os;
  os << "fund:[";
  auto a = w.fundamental_coords();
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << "]";
  return os.str();
}

std::string format_weight(const Weight& w) {
  return format_eps(w) + " = " + format_fund(w);
}

// ---------------------------------------------------------------------------
// RootSystemD

RootSystemD::RootSystemD(int rank)
    : rank_(rank), rho_(Weight::zero(std::max(rank, 2))) {
  if (rank < 4 || rank > 8)
    throw std::invalid_argument("rank must be between 4 and 8");
  std::vector<std::int64_t> r(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) r[static_cast<size_t>(i)] = 2 * (rank - 1 - i);
  rho_ = Weight(std::move(r));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      positive_.push_back({i, j, -1});
      positive_.push_back({i, j, +1});
    }
}

std::uint64_t RootSystemD::weyl_order() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= rank_; ++i) f *= static_cast<std::uint64_t>(i);
  return f << (rank_ - 1);
}

Weight RootSystemD::fundamental_weight(int i) const {
  return Weight::fundamental(rank_, i);
}

Weight RootSystemD::simple_root(int i) const {
  std::vector<std::int64_t> d(static_cast<size_t>(rank_), 0);
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index");
  if (i < rank_) {
    d[static_cast<size_t>(i - 1)] = 2;
    d[static_cast<size_t>(i)] = -2;
  } else {
    d[static_cast<size_t>(rank_ - 2)] = 2;
    d[static_cast<size_t>(rank_ - 1)] = 2;
  }
  return Weight(std::move(d));
}

// ---------------------------------------------------------------------------
// Weyl dimension formula

mpz_class weyl_dimension(const RootSystemD& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("rank mismatch");
  if (!lambda.is_dominant()) {
    const auto& d = lambda.twice();
    const size_t n = d.size();
    std::ostringstream os;
    os << "weight is not dominant: ";
    bool found = false;
    for (size_t i = 0; i + 2 < n; ++i)
      if (d[i] < d[i + 1]) {
        os << "c[" << i + 1 << "] < c[" << i + 2 << "]";
        found = true;
        break;
      }
    if (!found) os << "c[" << n - 1 << "] < |c[" << n << "]|";
    throw std::domain_error(os.str());
  }
  // dim = prod over i<j of (u_i^2 - u_j^2) / (r_i^2 - r_j^2) with u = 2(lambda+rho)
  const auto& dl = lambda.twice();
  const auto& dr = rs.rho().twice();
  mpz_class num = 1, den = 1;
  const int n = rs.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      mpz_class ui = dl[static_cast<size_t>(i)] + dr[static_cast<size_t>(i)];
      mpz_class uj = dl[static_cast<size_t>(j)] + dr[static_cast<size_t>(j)];
      mpz_class ri = dr[static_cast<size_t>(i)], rj = dr[static_cast<size_t>(j)];
      num *= ui * ui - uj * uj;
      den *= ri * ri - rj * rj;
    }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("Weyl dimension not integral");
  return q;
}

IrreducibleModule make_module(const RootSystemD& rs, const Weight& lambda) {
  return IrreducibleModule{lambda, weyl_dimension(rs, lambda)};
}

// ---------------------------------------------------------------------------
// Weyl conjugation

bool is_regular(const Weight& mu) {
  std::vector<std::int64_t> a;
  for (std::int64_t d : mu.twice()) a.push_back(std::abs(d));
  std::sort(a.begin(), a.end());
  return std::adjacent_find(a.begin(), a.end()) == a.end();
}

DominantConjugate dominant_conjugate(const RootSystemD& rs, const Weight& mu) {
  if (mu.rank() != rs.rank()) throw std::invalid_argument("rank mismatch");
  if (!is_regular(mu)) return DominantConjugate{true, dominate(mu), 0};
  std::vector<std::int64_t> d = mu.twice();
  const size_t n = d.size();
  int length = 0;
  const std::uint64_t cap = rs.weyl_order();
  for (std::uint64_t iter = 0; iter <= cap; ++iter) {
    size_t neg = n;  // index of lowest simple root pairing negatively
    for (size_t i = 0; i + 1 < n; ++i)
      if (d[i] < d[i + 1]) {
        neg = i;
        break;
      }
    if (neg == n && d[n - 2] + d[n - 1] < 0) neg = n - 1;
    if (neg == n) return DominantConjugate{false, Weight(d), length};
    if (neg == n - 1) {  // alpha_n: swap and negate the last two coordinates
      std::int64_t a = d[n - 2], b = d[n - 1];
      d[n - 2] = -b;
      d[n - 1] = -a;
    } else {
      std::swap(d[neg], d[neg + 1]);
    }
    ++length;
  }
  throw std::overflow_error("Weyl conjugation did not terminate");
}

Weight dominate(const Weight& mu) {
  std::vector<std::int64_t> d = mu.twice();
  int negatives = 0;
  bool has_zero = false;
  for (auto& x : d) {
    if (x < 0) {
      ++negatives;
      x = -x;
    }
    if (x == 0) has_zero = true;
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  if (negatives % 2 == 1 && !has_zero) d.back() = -d.back();
  return Weight(std::move(d));
}

int dominate_sign(const Weight& mu) {
  // (-1)^{length} = det(w); every element of W(D_n) flips an even number of
  // signs, so det is the sign of the sorting permutation.  Requires mu
  // regular (no ties among |coordinates|).
  if (!is_regular(mu)) throw std::invalid_argument("sign of singular weight");
  std::vector<std::int64_t> a;
  for (std::int64_t d : mu.twice()) a.push_back(std::abs(d));
  int inversions = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] < a[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// weight systems (Freudenthal)

namespace {

// partial "mu <= lambda" test in the root order: lambda - mu must be a
// nonnegative integer combination of simple roots.
bool below_in_root_order(const std::vector<std::int64_t>& dlam,
                         const std::vector<std::int64_t>& dmu) {
  const size_t n = dlam.size();
  std::vector<std::int64_t> nu(n);
  for (size_t i = 0; i < n; ++i) {
    std::int64_t diff = dlam[i] - dmu[i];
    if (diff % 2 != 0) return false;
    nu[i] = diff / 2;
  }
  std::int64_t s = 0;
  for (size_t k = 0; k + 2 < n; ++k) {
    s += nu[k];
    if (s < 0) return false;  // coefficient of alpha_{k+1}
  }
  std::int64_t s_n1 = s + nu[n - 2];          // partial sum through n-1
  std::int64_t s_n = s_n1 + nu[n - 1];        // full sum
  if (s_n % 2 != 0) return false;             // root-lattice condition
  if (s_n1 - nu[n - 1] < 0) return false;     // 2 * coefficient of alpha_{n-1}
  if (s_n < 0) return false;                  // 2 * coefficient of alpha_n
  return true;
}

std::int64_t height_below(const std::vector<std::int64_t>& dlam,
                          const std::vector<std::int64_t>& dmu) {
  // sum of simple-root coefficients of lambda - mu, doubled to stay integral
  const size_t n = dlam.size();
  std::vector<std::int64_t> nu(n);
  for (size_t i = 0; i < n; ++i) nu[i] = (dlam[i] - dmu[i]) / 2;
  std::int64_t h2 = 0, s = 0;
  for (size_t k = 0; k + 2 < n; ++k) {
    s += nu[k];
    h2 += 2 * s;
  }
  std::int64_t s_n1 = s + nu[n - 2];
  std::int64_t s_n = s_n1 + nu[n - 1];
  h2 += (s_n1 - nu[n - 1]);  // alpha_{n-1}
  h2 += s_n;                 // alpha_n
  return h2;
}

std::int64_t norm2_twice(const std::vector<std::int64_t>& d) {
  std::int64_t s = 0;
  for (auto x : d) s += x * x;
  return s;
}

struct CacheKey {
  int rank;
  std::vector<std::int64_t> d;
  bool operator<(const CacheKey& o) const {
    return std::tie(rank, d) < std::tie(o.rank, o.d);
  }
};

std::mutex g_cache_mutex;
std::map<CacheKey, std::map<Weight, mpz_class>> g_dominant_cache;

}  // namespace

std::map<Weight, mpz_class> dominant_weight_multiplicities(
    const RootSystemD& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("rank mismatch");
  if (!lambda.is_dominant()) throw std::domain_error("lambda not dominant");
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_dominant_cache.find({rs.rank(), lambda.twice()});
    if (it != g_dominant_cache.end()) return it->second;
  }

  const auto& dlam = lambda.twice();
  const size_t n = dlam.size();
  const std::int64_t top = dlam[0];

  // enumerate dominant candidates below lambda; stepping by two preserves
  // the parity of lambda's doubled coordinates
  std::vector<std::vector<std::int64_t>> dominants;
  std::vector<std::int64_t> cur(n);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos + 1 == n) {
      std::int64_t bound = cur[n - 2];
      for (std::int64_t v = -bound; v <= bound; v += 2) {
        cur[n - 1] = v;
        if (below_in_root_order(dlam, cur)) dominants.push_back(cur);
      }
      return;
    }
    std::int64_t hi = pos == 0 ? top : cur[pos - 1];
    for (std::int64_t v = hi; v >= 0; v -= 2) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  std::sort(dominants.begin(), dominants.end(),
            [&](const auto& a, const auto& b) {
              return height_below(dlam, a) < height_below(dlam, b);
            });

  const auto& drho = rs.rho().twice();
  std::vector<std::int64_t> dlamrho(n);
  for (size_t i = 0; i < n; ++i) dlamrho[i] = dlam[i] + drho[i];
  const std::int64_t a_norm = norm2_twice(dlamrho);

  std::map<Weight, mpz_class> mult;
  for (const auto& dmu : dominants) {
    if (dmu == dlam) {
      mult.emplace(Weight(dmu), 1);
      continue;
    }
    mpz_class acc = 0;
    for (const auto& root : rs.positive_roots()) {
      std::vector<std::int64_t> nu = dmu;
      // mu + k*alpha leaves the weight polytope once and for all, so a
      // table miss terminates the k-loop.
      for (;;) {
        nu[static_cast<size_t>(root.i)] += 2;
        nu[static_cast<size_t>(root.j)] += 2 * root.sign;
        Weight rep = dominate(Weight(nu));
        auto it = mult.find(rep);
        if (it == mult.end()) break;
        std::int64_t pairing =
            nu[static_cast<size_t>(root.i)] + root.sign * nu[static_cast<size_t>(root.j)];
        acc += it->second * pairing;
      }
    }
    std::vector<std::int64_t> dmurho(n);
    for (size_t i = 0; i < n; ++i) dmurho[i] = dmu[i] + drho[i];
    const std::int64_t denom = a_norm - norm2_twice(dmurho);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator");
    mpz_class num = 4 * acc;
    mpz_class q, r;
    mpz_class d(static_cast<long>(denom));
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw std::logic_error("Freudenthal division not exact");
    if (q <= 0) throw std::logic_error("Freudenthal multiplicity not positive");
    mult.emplace(Weight(dmu), q);
  }

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_dominant_cache[{rs.rank(), lambda.twice()}] = mult;
  return mult;
}

mpz_class weight_multiplicity(const RootSystemD& rs, const Weight& lambda,
                              const Weight& mu) {
  if (mu.rank() != rs.rank()) throw std::invalid_argument("rank mismatch");
  // lambda - mu must lie in the root lattice
  const auto& dl = lambda.twice();
  const auto& dm = mu.twice();
  std::int64_t half_sum = 0;
  for (size_t i = 0; i < dl.size(); ++i) {
    if ((dl[i] - dm[i]) % 2 != 0) return 0;
    half_sum += (dl[i] - dm[i]) / 2;
  }
  if (half_sum % 2 != 0) return 0;
  auto table = dominant_weight_multiplicities(rs, lambda);
  auto it = table.find(dominate(mu));
  return it == table.end() ? mpz_class(0) : it->second;
}

std::vector<Weight> weyl_orbit(const RootSystemD& rs, const Weight& mu) {
  std::vector<Weight> orbit;
  std::map<std::vector<std::int64_t>, bool> seen;
  std::vector<std::vector<std::int64_t>> queue{mu.twice()};
  seen[mu.twice()] = true;
  const size_t n = mu.twice().size();
  while (!queue.empty()) {
    auto d = queue.back();
    queue.pop_back();
    orbit.emplace_back(Weight(d));
    for (int s = 0; s < rs.rank(); ++s) {
      auto e = d;
      if (s + 1 < rs.rank()) {
        std::swap(e[static_cast<size_t>(s)], e[static_cast<size_t>(s) + 1]);
      } else {
        std::int64_t a = e[n - 2], b = e[n - 1];
        e[n - 2] = -b;
        e[n - 1] = -a;
      }
      if (!seen.count(e)) {
        seen[e] = true;
        queue.push_back(e);
      }
    }
  }
  return orbit;
}

std::map<Weight, mpz_class> weight_system(const RootSystemD& rs,
                                          const Weight& lambda) {
  std::map<Weight, mpz_class> ws;
  for (const auto& [mu, m] : dominant_weight_multiplicities(rs, lambda))
    for (const auto& w : weyl_orbit(rs, mu)) ws.emplace(w, m);
  return ws;
}

std::map<Weight, mpz_class> tensor_decompose(const RootSystemD& rs,
                                             const Weight& lambda,
                                             const Weight& mu) {
  if (!lambda.is_dominant() || !mu.is_dominant())
    throw std::domain_error("tensor factors must be dominant");
  const auto ws = weight_system(rs, mu);
  const auto& drho = rs.rho().twice();
  const auto& dlam = lambda.twice();
  const size_t n = dlam.size();
  std::map<Weight, mpz_class> acc;
  for (const auto& [nu, m] : ws) {
    std::vector<std::int64_t> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = dlam[i] + drho[i] + nu.twice()[i];
    Weight shifted{d};
    if (!is_regular(shifted)) continue;
    int sign = dominate_sign(shifted);
    auto dom = dominate(shifted).twice();
    for (size_t i = 0; i < n; ++i) dom[i] -= drho[i];
    acc[Weight(dom)] += sign * m;
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0)
      it = acc.erase(it);
    else if (it->second < 0)
      throw std::logic_error("negative multiplicity in tensor decomposition");
    else
      ++it;
  }
  return acc;
}

}  // namespace spinvar::weights

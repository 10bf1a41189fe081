// spinvar: batch front end for the exact spinor-variety computations.
//
// Subcommands map onto the main results: dims, tensor, bott, vanishings,
// hilbert, hodge, poincare, motivic, geometry, all.  Exit code 0 means every
// check passed, 1 means a mismatch against a reference value, 2 means a
// usage error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinvar/bott.hpp"
#include "spinvar/clifford.hpp"
#include "spinvar/euler.hpp"
#include "spinvar/geometry.hpp"
#include "spinvar/motivic.hpp"
#include "spinvar/weights.hpp"

namespace {

using nlohmann::json;
using namespace spinvar;

struct RunConfig {
  int rank = 5;
  std::uint64_t prime = 2305843009213693951ULL;  // 2^61 - 1
  std::uint64_t seed = 0;
  int trials = 100;
  bool json_output = false;
  std::int64_t k_from = 0;
  std::int64_t k_to = 20;
};

struct CheckRow {
  std::string label;
  bool ok = true;
  std::string detail;
  json data;
};

void add_row(std::vector<CheckRow>& rows, std::string label, bool ok,
             std::string detail, json data = json::object()) {
  rows.push_back(CheckRow{std::move(label), ok, std::move(detail), std::move(data)});
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> run_dims(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  weights::RootSystemD rs(cfg.rank);
  if (cfg.rank == 5) {
    struct Entry {
      const char* name;
      std::vector<std::int64_t> fund;
      long expect;
    };
    const std::vector<Entry> table = {
        {"Delta", {0, 0, 0, 0, 1}, 16},    {"V10", {1, 0, 0, 0, 0}, 10},
        {"V(w2)", {0, 1, 0, 0, 0}, 45},    {"V(w3)", {0, 0, 1, 0, 0}, 120},
        {"V(2w5)", {0, 0, 0, 0, 2}, 126},  {"V(w4+w5)", {0, 0, 0, 1, 1}, 210},
        {"V(w1+w3)", {1, 0, 1, 0, 0}, 945},
    };
    for (const auto& e : table) {
      auto w = weights::Weight::from_fundamental(e.fund);
      mpz_class d = weights::weyl_dimension(rs, w);
      add_row(rows, std::string("dims/") + e.name, d == e.expect,
              weights::format_weight(w) + "  dim " + d.get_str() +
                  "  (expect " + std::to_string(e.expect) + ")",
              {{"weight", weights::format_fund(w)}, {"dim", d.get_str()}});
    }
    mpz_class d16 = 16, lhs = d16 * 16, rhs = mpz_class(210 + 45 + 1);
    add_row(rows, "dims/sum-check-16x16", lhs == rhs,
            "16*16 = 210 + 45 + 1 = " + lhs.get_str());
    add_row(rows, "dims/sum-check-120x10", 120 * 10 == 210 + 45 + 945,
            "120*10 = 210 + 45 + 945 = 1200");
  } else {
    for (int i = 1; i <= cfg.rank; ++i) {
      auto w = rs.fundamental_weight(i);
      mpz_class d = weights::weyl_dimension(rs, w);
      add_row(rows, "dims/omega_" + std::to_string(i), true,
              weights::format_weight(w) + "  dim " + d.get_str(),
              {{"dim", d.get_str()}});
    }
  }
  return rows;
}

json decomposition_json(const weights::RootSystemD& rs,
                        const std::map<weights::Weight, mpz_class>& dec) {
  json out = json::array();
  for (const auto& [w, m] : dec)
    out.push_back({{"weight", weights::format_fund(w)},
                   {"mult", m.get_str()},
                   {"dim", weights::weyl_dimension(rs, w).get_str()}});
  return out;
}

std::string decomposition_text(const std::map<weights::Weight, mpz_class>& dec) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : dec) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m.get_str() << "*";
    os << "V(" << weights::format_weight(w) << ")";
  }
  return os.str();
}

std::vector<CheckRow> run_tensor(const RunConfig& cfg,
                                 const std::vector<std::string>& omegas) {
  std::vector<CheckRow> rows;
  weights::RootSystemD rs(cfg.rank);
  if (omegas.size() == 1)
    throw std::invalid_argument("tensor needs zero or two weights");
  if (omegas.size() >= 2) {
    auto a = weights::parse_weight(omegas[0]);
    auto b = weights::parse_weight(omegas[1]);
    auto dec = weights::tensor_decompose(rs, a, b);
    mpz_class total = 0;
    for (const auto& [w, m] : dec) total += m * weights::weyl_dimension(rs, w);
    bool ok = total == weights::weyl_dimension(rs, a) * weights::weyl_dimension(rs, b);
    add_row(rows, "tensor/custom", ok, decomposition_text(dec),
            {{"decomposition", decomposition_json(rs, dec)}});
    return rows;
  }
  if (cfg.rank != 5) {
    add_row(rows, "tensor/skipped", true, "built-in checks need rank 5");
    return rows;
  }
  // Delta^v (x) Delta_-^v and wedge^2 Delta^v (x) V10
  auto w5 = rs.fundamental_weight(5);
  auto w4 = rs.fundamental_weight(4);
  auto d1 = weights::tensor_decompose(rs, w5, w4);
  bool ok1 = d1.size() == 3 &&
             d1.count(weights::Weight::from_fundamental({0, 0, 0, 1, 1})) &&
             d1.count(rs.fundamental_weight(2)) &&
             d1.count(weights::Weight::zero(5));
  add_row(rows, "tensor/w5xw4", ok1, decomposition_text(d1),
          {{"decomposition", decomposition_json(rs, d1)}});
  auto d2 = weights::tensor_decompose(rs, rs.fundamental_weight(3),
                                      rs.fundamental_weight(1));
  bool ok2 = d2.size() == 3 &&
             d2.count(weights::Weight::from_fundamental({0, 0, 0, 1, 1})) &&
             d2.count(rs.fundamental_weight(2)) &&
             d2.count(weights::Weight::from_fundamental({1, 0, 1, 0, 0}));
  add_row(rows, "tensor/w3xw1", ok2, decomposition_text(d2),
          {{"decomposition", decomposition_json(rs, d2)}});
  return rows;
}

std::vector<CheckRow> run_bott(const std::string& expr) {
  std::vector<CheckRow> rows;
  auto e = bott::construct(expr);
  mpz_class chi = bott::euler_char_on_S(e);
  json terms = json::array();
  std::ostringstream os;
  if (e.terms.empty()) os << "zero bundle";
  for (const auto& [c, b] : e.terms) {
    auto ans = bott::bott_cohomology(b);
    std::ostringstream line;
    if (c != 1) line << c.get_str() << "*";
    line << b.name << ": " << bott::describe(ans);
    terms.push_back({{"coeff", c.get_str()},
                     {"bundle", b.name},
                     {"weight", weights::format_eps(b.weight)},
                     {"answer", bott::describe(ans)}});
    os << "\n    " << line.str();
  }
  add_row(rows, "bott/" + expr, true, os.str() + "\n    chi = " + chi.get_str(),
          {{"expr", expr}, {"terms", terms}, {"chi", chi.get_str()}});
  return rows;
}

std::vector<CheckRow> run_vanishings(const RunConfig&) {
  std::vector<CheckRow> rows;
  auto report = [&](const char* label, const std::vector<bott::FamilyEntry>& fam) {
    json table = json::array();
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& row : bott::vanishing_report(fam)) {
      all_ok = all_ok && row.required_ok;
      table.push_back({{"bundle", row.entry.name},
                       {"answer", bott::describe(row.answer)},
                       {"required_ok", row.required_ok}});
      os << "\n    " << row.entry.name << ": " << bott::describe(row.answer)
         << (row.required_ok ? "" : "  <-- required group does not vanish");
    }
    add_row(rows, std::string("vanishings/") + label, all_ok, os.str(),
            {{"table", table}});
  };
  report("deformation", bott::deformation_family());
  report("hoppe", bott::hoppe_family());

  // the e,t scan: wedge powers of Ud twisted by -1..-8, degrees up to 5
  std::vector<std::string> exceptions;
  for (int e = 1; e <= 4; ++e)
    for (int t = 1; t <= 8; ++t) {
      auto expr = bott::construct("wedge(" + std::to_string(e) + ",Ud)(-" +
                                  std::to_string(t) + ")");
      auto ans = bott::bott_cohomology(expr.terms.at(0).second);
      if (!ans.acyclic && ans.degree <= 5)
        exceptions.push_back("H^" + std::to_string(ans.degree) + "(wedge(" +
                             std::to_string(e) + ",Ud)(-" + std::to_string(t) +
                             ")) = " + bott::module_name(*ans.module));
    }
  std::sort(exceptions.begin(), exceptions.end());
  bool scan_ok = exceptions.size() == 2 &&
                 exceptions[0] == "H^0(wedge(4,Ud)(-1)) = Delta" &&
                 exceptions[1] == "H^1(wedge(3,Ud)(-2)) = trivial";
  std::ostringstream os;
  for (const auto& s : exceptions) os << "\n    " << s;
  add_row(rows, "vanishings/scan", scan_ok, os.str(), {{"exceptions", exceptions}});
  return rows;
}

std::vector<CheckRow> run_hilbert(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  auto p = euler::hilbert_S_polynomial();
  mpz_class fact10;
  mpz_fac_ui(fact10.get_mpz_t(), 10);
  bool degree_ok = p.leading_coefficient() * fact10 == 12;
  add_row(rows, "hilbert/degree", degree_ok,
          "H_S = " + p.to_string() + "; degree of S = 12");
  json table = json::array();
  std::ostringstream os;
  bool ok = true;
  for (std::int64_t k = cfg.k_from; k <= cfg.k_to; ++k) {
    mpz_class hs = euler::hilbert_S(k);
    mpz_class hx = euler::hilbert_X(k);  // throws if the two routes disagree
    if (k >= 0) {
      auto ans = bott::bott_cohomology(bott::line_bundle(5, k));
      ok = ok && !ans.acyclic && ans.degree == 0 && ans.module->dimension == hs;
    }
    table.push_back({{"k", k}, {"H_S", hs.get_str()}, {"H_X", hx.get_str()}});
    os << "\n    k=" << k << "  H_S=" << hs.get_str() << "  H_X=" << hx.get_str();
  }
  add_row(rows, "hilbert/table", ok, os.str(), {{"table", table}});
  return rows;
}

std::vector<CheckRow> run_hodge(const RunConfig&) {
  std::vector<CheckRow> rows;
  auto t = euler::hodge_numbers_X();
  std::ostringstream os;
  json h = json::array();
  for (int p = 0; p <= 5; ++p) {
    json row = json::array();
    os << "\n    ";
    for (int q = 0; q <= 5; ++q) {
      row.push_back(t.h[static_cast<size_t>(p)][static_cast<size_t>(q)]);
      os << t.h[static_cast<size_t>(p)][static_cast<size_t>(q)] << "\t";
    }
    h.push_back(row);
  }
  os << "\n    chi_top = " << t.chi_top();
  bool ok = t.h[1][4] == 165 && t.h[2][3] == 1805 && t.symmetric() &&
            t.chi_top() == -3936;
  add_row(rows, "hodge/table", ok, os.str(),
          {{"h", h}, {"chi_top", t.chi_top()}});
  mpz_class chi0 = euler::koszul_euler_on_X(bott::construct("O"));
  add_row(rows, "hodge/chi-O", chi0 == 0, "chi(O_X) = " + chi0.get_str(),
          {{"chi", chi0.get_str()}});
  return rows;
}

std::vector<CheckRow> run_poincare(const RunConfig&) {
  std::vector<CheckRow> rows;
  auto ps = motivic::poincare_S();
  add_row(rows, "poincare/S", ps.evaluate_at_one() == 16,
          "P_S coefficients " + ps.coefficient_list() + ", P_S(1) = " +
              ps.evaluate_at_one().get_str(),
          {{"coefficients", ps.coefficient_list()}});
  auto [sing, reg] = motivic::hyperplane_section_classes();
  bool diff_ok = sing - reg == motivic::MotivicPolynomial::monomial(7);
  add_row(rows, "poincare/sections", diff_ok,
          "[HS_sing] = " + sing.coefficient_list() + ", [HS_reg] = " +
              reg.coefficient_list() + ", difference = L^7",
          {{"sing", sing.coefficient_list()}, {"reg", reg.coefficient_list()}});
  return rows;
}

std::vector<CheckRow> run_motivic(const RunConfig&) {
  std::vector<CheckRow> rows;
  auto id = motivic::derive_L_equivalence();
  std::ostringstream os;
  os << "\n    [Q] = " << id.q_via_first_projection.to_string();
  os << "\n    [Q] = " << id.q_via_second_projection.to_string();
  os << "\n    " << id.identity();
  add_row(rows, "motivic/L-equivalence", id.identity() == "([X]-[Y])*L^7 = 0",
          os.str(),
          {{"identity", id.identity()},
           {"q_first", id.q_via_first_projection.to_string()},
           {"q_second", id.q_via_second_projection.to_string()}});
  return rows;
}

std::vector<CheckRow> run_geometry(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  geometry::SuiteConfig sc;
  sc.prime = cfg.prime;
  sc.seed = cfg.seed;
  sc.trials = cfg.trials;
  for (const auto& suite : geometry::run_all_suites(sc)) {
    add_row(rows, "geometry/" + suite.name, suite.ok(),
            std::to_string(suite.trials) + " trials, " +
                std::to_string(suite.failures) + " failures",
            {{"trials", suite.trials}, {"failures", suite.failures}});
  }
  return rows;
}

int emit(const RunConfig& cfg, std::vector<CheckRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CheckRow& a, const CheckRow& b) { return a.label < b.label; });
  std::vector<std::string> failures;
  for (const auto& r : rows)
    if (!r.ok) failures.push_back(r.label);
  if (cfg.json_output) {
    json doc;
    doc["config"] = {{"rank", cfg.rank},   {"prime", cfg.prime},
                     {"seed", cfg.seed},   {"trials", cfg.trials},
                     {"k_from", cfg.k_from}, {"k_to", cfg.k_to}};
    doc["results"] = json::array();
    for (const auto& r : rows)
      doc["results"].push_back(
          {{"label", r.label}, {"ok", r.ok}, {"detail", r.detail}, {"data", r.data}});
    doc["failures"] = failures;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << (r.ok ? "[ OK ] " : "[FAIL] ") << r.label << ": " << r.detail
                << "\n";
    if (!failures.empty()) {
      std::cout << "failures:";
      for (const auto& f : failures) std::cout << " " << f;
      std::cout << "\n";
    }
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for spinor varieties and their double sections"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string k_range = "0..20";
  app.add_option("--rank", cfg.rank, "rank of the root system (4..8)")
      ->check(CLI::Range(4, 8));
  app.add_option("--prime", cfg.prime, "odd prime for the randomized suites");
  app.add_option("--seed", cfg.seed, "seed for the randomized suites");
  app.add_option("--trials", cfg.trials, "trials per randomized suite")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json_output, "structured output");
  app.add_option("--k-range", k_range, "range a..b for hilbert tables");

  std::string bundle_expr;
  std::vector<std::string> omegas;

  auto* dims = app.add_subcommand("dims", "dimension table of the named modules");
  auto* tensor = app.add_subcommand("tensor", "tensor product decompositions");
  tensor->add_option("--omega", omegas, "weights fund:[...] or eps:[...]")
      ->expected(0, 2);
  tensor->add_option("weights", omegas, "two weights to decompose");
  auto* bott_cmd = app.add_subcommand("bott", "cohomology of a bundle expression");
  bott_cmd->add_option("--bundle", bundle_expr, "bundle expression");
  bott_cmd->add_option("expr", bundle_expr, "bundle expression");
  auto* vanish = app.add_subcommand("vanishings", "the built-in vanishing families");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomials of S and X");
  auto* hodge = app.add_subcommand("hodge", "Hodge numbers of the double section");
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials and cell classes");
  auto* motivic_cmd = app.add_subcommand("motivic", "the L-equivalence identity");
  auto* geometry_cmd = app.add_subcommand("geometry", "randomized Clifford suites");
  auto* all = app.add_subcommand("all", "every check with the default inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto parse_range = [&]() {
      auto dots = k_range.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("k-range must look like a..b");
      cfg.k_from = std::stoll(k_range.substr(0, dots));
      cfg.k_to = std::stoll(k_range.substr(dots + 2));
      if (cfg.k_to < cfg.k_from) throw std::invalid_argument("empty k-range");
    };
    parse_range();
    if (!clifford::PrimeField::is_prime(cfg.prime))
      throw std::invalid_argument("--prime must be prime");

    std::vector<CheckRow> rows;
    if (dims->parsed()) rows = run_dims(cfg);
    if (tensor->parsed()) rows = run_tensor(cfg, omegas);
    if (bott_cmd->parsed()) {
      if (bundle_expr.empty())
        throw std::invalid_argument("bott needs a bundle expression");
      rows = run_bott(bundle_expr);
    }
    if (vanish->parsed()) rows = run_vanishings(cfg);
    if (hilbert->parsed()) rows = run_hilbert(cfg);
    if (hodge->parsed()) rows = run_hodge(cfg);
    if (poincare->parsed()) rows = run_poincare(cfg);
    if (motivic_cmd->parsed()) rows = run_motivic(cfg);
    if (geometry_cmd->parsed()) rows = run_geometry(cfg);
    if (all->parsed()) {
      for (auto&& part :
           {run_dims(cfg), run_tensor(cfg, {}), run_vanishings(cfg),
            run_hilbert(cfg), run_hodge(cfg), run_poincare(cfg),
            run_motivic(cfg), run_geometry(cfg)})
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return emit(cfg, std::move(rows));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

// Command-line driver. Five subcommands:
//   table    emit one of the four triangles (csv, json or pretty)
//   verify   run identity suites and report every instance checked
//   orbit    walk the shift-operator orbit of one permutation
//   census   divisor-indexed orbit counts for one (n, k), with the
//            divisor-sum recompositions checked against the triangles
//   special  the arithmetic-progression permutation and its parity flag
//
// Exit codes: 0 all checks pass, 1 identity failure or internal
// invariant breach, 2 usage error (bad flags, malformed input, out of
// range). EULERIAN_ORACLE_CAP overrides the default n <= 10 enumeration
// cap at the caller's own risk.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/io.hpp"
#include "eulerian/oracle.hpp"
#include "eulerian/orbit.hpp"
#include "eulerian/permutation.hpp"
#include "eulerian/triangle.hpp"

namespace {

using eulerian::BigInt;
using eulerian::CheckReport;
using eulerian::Triangle;
using eulerian::TriangleKind;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
  if (!out) throw std::invalid_argument("failed writing output file: " + out_path);
}

int oracle_cap_from_env() {
  const char* env = std::getenv("EULERIAN_ORACLE_CAP");
  if (env == nullptr) return eulerian::kDefaultOracleCap;
  const std::string s(env);
  size_t used = 0;
  int cap = 0;
  try {
    cap = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("EULERIAN_ORACLE_CAP must be an integer, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("EULERIAN_ORACLE_CAP must be an integer, got '" + s + "'");
  if (cap < 2) throw std::invalid_argument("EULERIAN_ORACLE_CAP must be >= 2, got '" + s + "'");
  return cap;
}

int run_table(const std::string& kind_str, int n_max, bool paper_range, const std::string& format,
              const std::string& out_path) {
  int first_row = 1;
  if (paper_range) {
    n_max = 10;
    first_row = 2;
  }
  const TriangleKind kind = eulerian::parse_kind(kind_str);
  Triangle t = [&] {
    switch (kind) {
      case TriangleKind::A: return eulerian::eulerian_triangle(n_max);
      case TriangleKind::B: return eulerian::split_triangles(n_max).first;
      case TriangleKind::C: return eulerian::split_triangles(n_max).second;
      default: return eulerian::signed_triangle(n_max);
    }
  }();
  std::string text;
  if (format == "csv") {
    text = eulerian::triangle_to_csv(t, first_row);
  } else if (format == "json") {
    auto meta = eulerian::make_meta("table", {{"kind", kind_str},
                                              {"n_max", n_max},
                                              {"format", format},
                                              {"paper_range", paper_range}});
    text = eulerian::triangle_to_json(t, std::move(meta), first_row).dump(2) + "\n";
  } else {
    text = eulerian::triangle_to_pretty(t, first_row);
  }
  emit(text, out_path);
  return 0;
}

// Default scopes when --n-max is 0: structural suites on recurrence
// triangles run to 50; census-backed suites to odd n = 9; enumeration
// suites to the oracle cap; divisibility over its default (n, p) list.
constexpr int kStructuralDefault = 50;

const std::vector<std::pair<int, int>> kDivisibilityPairs = {{9, 3},  {15, 3}, {15, 5}, {25, 5},
                                                             {27, 3}, {45, 3}, {45, 5}, {49, 7}};

CheckReport run_one_suite(const std::string& suite, int n_max, int threads, int cap, int div_n, long long div_p,
                          const std::string& inject_fault) {
  CheckReport report;
  const auto append = [&report](CheckReport part) {
    report.insert(report.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };

  if (suite == "symmetry") {
    const int nm = n_max > 0 ? n_max : kStructuralDefault;
    eulerian::TriangleBundle bundle = eulerian::compute_bundle(nm);
    if (!inject_fault.empty()) {
      const size_t comma = inject_fault.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--inject-fault wants 'N,K', got '" + inject_fault + "'");
      const int fn = std::stoi(inject_fault.substr(0, comma));
      const int fk = std::stoi(inject_fault.substr(comma + 1));
      bundle.b.set(fn, fk, bundle.b.at(fn, fk) + 1);
    }
    append(eulerian::check_symmetry(bundle));
  } else if (suite == "odd-recurrence") {
    append(eulerian::odd_n_recurrence_check(n_max > 0 ? n_max : kStructuralDefault));
  } else if (suite == "even-cross") {
    append(eulerian::even_n_cross_check(n_max > 0 ? n_max : kStructuralDefault));
  } else if (suite == "thm3.1") {
    const int nm = std::min(n_max > 0 ? n_max : eulerian::kDefaultCensusCap, eulerian::kDefaultCensusCap);
    for (int n = 3; n <= nm; n += 2) append(eulerian::check_orbit_sums(n, threads, cap));
  } else if (suite == "thm5.1") {
    const int nm = std::min(n_max > 0 ? n_max : eulerian::kDefaultCensusCap, eulerian::kDefaultCensusCap);
    for (int n = 3; n <= nm; n += 2) append(eulerian::check_progression_orbit_counts(n));
  } else if (suite == "cor3.2") {
    const int nm = std::min(n_max > 0 ? n_max : eulerian::kDefaultCensusCap, cap);
    for (int n = 3; n <= nm; n += 2) append(eulerian::check_class_cardinalities(n, threads, cap));
  } else if (suite == "cor4.3") {
    const int nm = std::min(n_max > 0 ? n_max : eulerian::kDefaultOracleCap, cap);
    for (int n = 2; n <= nm; ++n) append(eulerian::check_class_differences(n, threads, cap));
  } else if (suite == "divisibility") {
    if (div_n > 0 || div_p > 0) {
      if (div_n <= 0 || div_p <= 0) throw std::invalid_argument("divisibility wants both --n and --p");
      append(eulerian::divisibility_report(div_n, div_p));
    } else {
      for (const auto& [n, p] : kDivisibilityPairs)
        if (n_max <= 0 || n <= n_max) append(eulerian::divisibility_report(n, p));
    }
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return report;
}

int run_verify(const std::string& suite, int n_max, int threads, int div_n, long long div_p,
               const std::string& inject_fault, const std::string& format, const std::string& out_path) {
  const int cap = oracle_cap_from_env();
  if (!inject_fault.empty() && suite != "symmetry" && suite != "all")
    throw std::invalid_argument("--inject-fault applies to the symmetry suite");
  if ((div_n > 0 || div_p > 0) && suite != "divisibility" && suite != "all")
    throw std::invalid_argument("--n/--p apply to the divisibility suite");

  static const std::vector<std::string> kAll = {"symmetry", "odd-recurrence", "even-cross", "thm3.1",
                                                "thm5.1",   "cor3.2",         "cor4.3",     "divisibility"};
  CheckReport report;
  for (const std::string& s : (suite == "all" ? kAll : std::vector<std::string>{suite})) {
    CheckReport part = run_one_suite(s, n_max, threads, cap, div_n, div_p, inject_fault);
    report.insert(report.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }

  std::string text;
  if (format == "json") {
    nlohmann::json params = {{"suite", suite}, {"n_max", n_max}, {"format", format}};
    if (div_n > 0) params["n"] = div_n;
    if (div_p > 0) params["p"] = div_p;
    text = eulerian::report_to_json(report, eulerian::make_meta("verify", std::move(params))).dump(2) + "\n";
  } else if (format == "csv") {
    text = eulerian::report_to_csv(report);
  } else {
    text = eulerian::report_to_pretty(report);
  }
  emit(text, out_path);
  return eulerian::all_pass(report) ? 0 : 1;
}

int run_orbit(const std::string& literal, const std::string& format, const std::string& out_path) {
  const eulerian::Permutation p = eulerian::Permutation::parse(literal);
  const eulerian::OrbitRecord rec = eulerian::orbit(p);
  const int n = p.size();
  const int k = eulerian::ascent_count(p);
  const bool has_class = n >= 2;
  const bool minus = has_class && eulerian::sign_class(p) == eulerian::SignClass::EMinus;
  const bool even = eulerian::parity(p) == eulerian::Parity::Even;
  const long long d = eulerian::gcd(n, rec.period);

  std::string text;
  if (format == "json") {
    auto meta = eulerian::make_meta("orbit", {{"permutation", literal}, {"format", format}});
    nlohmann::json members = nlohmann::json::array();
    for (size_t i = 0; i < rec.members.size(); ++i)
      members.push_back({{"index", i + 1},
                         {"permutation", rec.members[i].to_string()},
                         {"canonical", has_class && eulerian::is_canonical(rec.members[i])}});
    nlohmann::json orbit_doc = {{"permutation", p.to_string()},
                                {"n", n},
                                {"period", rec.period},
                                {"ascents", k},
                                {"parity", even ? "even" : "odd"},
                                {"gcd_n_period", d},
                                {"members", std::move(members)}};
    orbit_doc["sign_class"] = has_class ? (minus ? "minus" : "plus") : "undefined";
    text = nlohmann::json{{"meta", std::move(meta)}, {"orbit", std::move(orbit_doc)}}.dump(2) + "\n";
  } else if (format == "csv") {
    text = "field,value\n";
    text += "permutation," + p.to_string() + "\n";
    text += "n," + std::to_string(n) + "\n";
    text += "period," + std::to_string(rec.period) + "\n";
    text += "ascents," + std::to_string(k) + "\n";
    text += std::string("sign_class,") + (has_class ? (minus ? "minus" : "plus") : "undefined") + "\n";
    text += std::string("parity,") + (even ? "even" : "odd") + "\n";
    text += "gcd_n_period," + std::to_string(d) + "\n\n";
    text += "index,member,canonical\n";
    for (size_t i = 0; i < rec.members.size(); ++i)
      text += std::to_string(i + 1) + "," + rec.members[i].to_string() + "," +
              (has_class && eulerian::is_canonical(rec.members[i]) ? "true" : "false") + "\n";
  } else {
    text = "permutation " + p.to_string() + " (n = " + std::to_string(n) + ")\n";
    text += "period " + std::to_string(rec.period) + "\n";
    text += "ascents k = " + std::to_string(k) + "\n";
    text += std::string("sign class ") +
            (has_class ? (minus ? "minus (a_1 < a_n)" : "plus (a_1 > a_n)") : "undefined (n = 1)") + "\n";
    text += std::string("parity ") + (even ? "even" : "odd") + "\n";
    text += "gcd(n, period) = " + std::to_string(d) + "\n";
    text += "members:\n";
    for (size_t i = 0; i < rec.members.size(); ++i) {
      text += "  sigma^" + std::to_string(i + 1) + "  " + rec.members[i].to_string();
      if (has_class && eulerian::is_canonical(rec.members[i])) text += "  (canonical)";
      text += "\n";
    }
  }
  emit(text, out_path);
  return 0;
}

int run_census(int n, int k, const std::string& format, const std::string& out_path) {
  const eulerian::OrbitCensus c = eulerian::census(n, k);
  const eulerian::TriangleBundle t = eulerian::compute_bundle(n);

  const auto weighted = [](const std::map<long long, long long>& m, long long factor) {
    long long s = 0;
    for (const auto& [d, cnt] : m) s += d * factor * cnt;
    return s;
  };
  const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
  const auto prev = [&](int kk) { return "(" + std::to_string(n - 1) + "," + std::to_string(kk) + ")"; };
  CheckReport checks;
  if (k >= 1) {
    const long long a = weighted(c.even_minus, 1);
    const long long g = weighted(c.odd_minus, 1);
    checks.push_back({"sum d*alpha[d] " + at + " = B" + prev(k - 1), BigInt(a) == t.b.at(n - 1, k - 1),
                      std::to_string(a) + " vs " + t.b.at(n - 1, k - 1).str()});
    checks.push_back({"sum d*gamma[d] " + at + " = C" + prev(k - 1), BigInt(g) == t.c.at(n - 1, k - 1),
                      std::to_string(g) + " vs " + t.c.at(n - 1, k - 1).str()});
  }
  if (k <= n - 2) {
    const long long b = weighted(c.even_plus, 1);
    const long long dl = weighted(c.odd_plus, 1);
    checks.push_back({"sum d*beta[d] " + at + " = B" + prev(k), BigInt(b) == t.b.at(n - 1, k),
                      std::to_string(b) + " vs " + t.b.at(n - 1, k).str()});
    checks.push_back({"sum d*delta[d] " + at + " = C" + prev(k), BigInt(dl) == t.c.at(n - 1, k),
                      std::to_string(dl) + " vs " + t.c.at(n - 1, k).str()});
  }
  const long long brec = weighted(c.even_minus, n - k) + weighted(c.even_plus, k + 1);
  const long long crec = weighted(c.odd_minus, n - k) + weighted(c.odd_plus, k + 1);
  checks.push_back({"B" + at + " recomposition", BigInt(brec) == t.b.at(n, k),
                    std::to_string(brec) + " vs " + t.b.at(n, k).str()});
  checks.push_back({"C" + at + " recomposition", BigInt(crec) == t.c.at(n, k),
                    std::to_string(crec) + " vs " + t.c.at(n, k).str()});

  std::string text;
  if (format == "json") {
    auto meta = eulerian::make_meta("census", {{"n", n}, {"k", k}, {"format", format}});
    const auto to_obj = [](const std::map<long long, long long>& m) {
      nlohmann::json obj = nlohmann::json::object();
      for (const auto& [d, cnt] : m) obj[std::to_string(d)] = std::to_string(cnt);
      return obj;
    };
    nlohmann::json checks_doc = nlohmann::json::array();
    for (const auto& r : checks) checks_doc.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    nlohmann::json census_doc = {{"n", n},
                                 {"k", k},
                                 {"alpha", to_obj(c.even_minus)},
                                 {"beta", to_obj(c.even_plus)},
                                 {"gamma", to_obj(c.odd_minus)},
                                 {"delta", to_obj(c.odd_plus)},
                                 {"checks", std::move(checks_doc)}};
    text = nlohmann::json{{"meta", std::move(meta)}, {"census", std::move(census_doc)}}.dump(2) + "\n";
  } else if (format == "csv") {
    text = "class,divisor,count\n";
    const auto rows = [&text](const char* name, const std::map<long long, long long>& m) {
      for (const auto& [d, cnt] : m)
        text += std::string(name) + "," + std::to_string(d) + "," + std::to_string(cnt) + "\n";
    };
    rows("alpha", c.even_minus);
    rows("beta", c.even_plus);
    rows("gamma", c.odd_minus);
    rows("delta", c.odd_plus);
    text += "\n" + eulerian::report_to_csv(checks);
  } else {
    text = "census n = " + std::to_string(n) + ", k = " + std::to_string(k) + "\n";
    const auto line = [&text](const char* name, const std::map<long long, long long>& m) {
      text += std::string(name) + "  {";
      bool first = true;
      for (const auto& [d, cnt] : m) {
        if (!first) text += ", ";
        first = false;
        text += std::to_string(d) + ": " + std::to_string(cnt);
      }
      text += "}\n";
    };
    line("alpha", c.even_minus);
    line("beta ", c.even_plus);
    line("gamma", c.odd_minus);
    line("delta", c.odd_plus);
    text += eulerian::report_to_pretty(checks);
  }
  emit(text, out_path);
  return eulerian::all_pass(checks) ? 0 : 1;
}

int run_special(int n, int ell, const std::string& format, const std::string& out_path) {
  const eulerian::Permutation p = eulerian::progression_permutation(n, ell);
  const long long inv = eulerian::inversion_count(p);
  const int eps = eulerian::epsilon(n, ell);
  std::string text;
  if (format == "json") {
    auto meta = eulerian::make_meta("special", {{"n", n}, {"ell", ell}, {"format", format}});
    nlohmann::json doc = {{"n", n},
                          {"ell", ell},
                          {"permutation", p.to_string()},
                          {"inversions", std::to_string(inv)},
                          {"epsilon", eps}};
    text = nlohmann::json{{"meta", std::move(meta)}, {"special", std::move(doc)}}.dump(2) + "\n";
  } else if (format == "csv") {
    text = "field,value\n";
    text += "n," + std::to_string(n) + "\n";
    text += "ell," + std::to_string(ell) + "\n";
    text += "permutation," + p.to_string() + "\n";
    text += "inversions," + std::to_string(inv) + "\n";
    text += "epsilon," + std::to_string(eps) + "\n";
  } else {
    text = "P(" + std::to_string(n) + ", " + std::to_string(ell) + ") = " + p.to_string() + "\n";
    text += "inversions " + std::to_string(inv) + "\n";
    text += "epsilon " + std::to_string(eps) + "\n";
  }
  emit(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact even/odd/signed Eulerian number triangles, shift-operator orbits and identity verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", eulerian::kVersion);

  const auto add_format = [](CLI::App* cmd, std::string& format, std::string& out_path) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  std::string t_kind;
  int t_n_max = 10;
  bool t_paper = false;
  std::string t_format = "pretty", t_out;
  CLI::App* table = app.add_subcommand("table", "Emit triangle rows n = 1..n-max");
  table->add_option("--kind", t_kind, "Triangle kind: A (all), B (even), C (odd), D (signed)")->required();
  table->add_option("--n-max", t_n_max, "Last row to emit")->capture_default_str();
  table->add_flag("--paper-range", t_paper, "Rows n = 2..10, the range of the reference tables");
  add_format(table, t_format, t_out);

  std::string v_suite = "all";
  int v_n_max = 0, v_threads = 1, v_n = 0;
  long long v_p = 0;
  std::string v_inject, v_format = "pretty", v_out;
  CLI::App* verify = app.add_subcommand("verify", "Run identity suites; exit 0 only if every check passes");
  verify
      ->add_option("--suite", v_suite,
                   "all, symmetry, odd-recurrence, even-cross, thm3.1, thm5.1, cor3.2, cor4.3, divisibility")
      ->check(CLI::IsMember(
          {"all", "symmetry", "odd-recurrence", "even-cross", "thm3.1", "thm5.1", "cor3.2", "cor4.3", "divisibility"}))
      ->capture_default_str();
  verify->add_option("--n-max", v_n_max, "Scope override; 0 keeps each suite's default")->capture_default_str();
  verify->add_option("--threads", v_threads, "Worker count for enumeration suites")->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--n", v_n, "Divisibility suite: single odd n (with --p)");
  verify->add_option("--p", v_p, "Divisibility suite: single prime p (with --n)");
  verify->add_option("--inject-fault", v_inject, "Corrupt cell 'N,K' of the even triangle before the symmetry suite");
  add_format(verify, v_format, v_out);

  std::string o_literal, o_format = "pretty", o_out;
  CLI::App* orbit_cmd = app.add_subcommand("orbit", "Walk the shift-operator orbit of a permutation");
  orbit_cmd->add_option("permutation", o_literal, "Digit form like 1324, or comma form like 10,1,2,...")->required();
  add_format(orbit_cmd, o_format, o_out);

  int c_n = 0, c_k = 0;
  std::string c_format = "pretty", c_out;
  CLI::App* census_cmd = app.add_subcommand("census", "Orbit census by divisor for one (n, k), odd n");
  census_cmd->add_option("--n", c_n, "Odd n, 3..9")->required();
  census_cmd->add_option("--k", c_k, "Ascent count, 0..n-1")->required();
  add_format(census_cmd, c_format, c_out);

  int s_n = 0, s_ell = 0;
  std::string s_format = "pretty", s_out;
  CLI::App* special = app.add_subcommand("special", "Arithmetic-progression permutation and its parity flag");
  special->add_option("--n", s_n, "Odd n")->required();
  special->add_option("--ell", s_ell, "Step, coprime to n")->required();
  add_format(special, s_format, s_out);

  try {
    app.parse(argc, argv);
    if (table->parsed()) return run_table(t_kind, t_n_max, t_paper, t_format, t_out);
    if (verify->parsed()) return run_verify(v_suite, v_n_max, v_threads, v_n, v_p, v_inject, v_format, v_out);
    if (orbit_cmd->parsed()) return run_orbit(o_literal, o_format, o_out);
    if (census_cmd->parsed()) return run_census(c_n, c_k, c_format, c_out);
    if (special->parsed()) return run_special(s_n, s_ell, s_format, s_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

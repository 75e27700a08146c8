#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pertinent/pertinent.hpp"

namespace {

using namespace pertinent;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out if given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::vector<Route> routes_for(Family family, const std::string& route) {
  if (route == "enumeration") return {Route::enumeration};
  if (family != Family::C) {
    if (route == "all") return {Route::enumeration};
    throw UsageError("route '" + route + "' applies to family C only");
  }
  if (route == "dag") return {Route::dag_census};
  if (route == "gf") return {Route::generating_function};
  return {Route::enumeration, Route::dag_census, Route::generating_function};
}

CoefficientTable compute(const TypeSpec& spec, Route route, const ParallelOptions& par) {
  switch (route) {
    case Route::dag_census: return count_dags_by_edges(spec.n(), par);
    case Route::generating_function: return count_dags_by_series(spec.n());
    default: return count_pertinent(spec, par);
  }
}

void render(const CoefficientTable& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << to_json(t).dump() << '\n';
  } else if (format == "csv") {
    os << "family,n,route,i,count\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
      os << to_char(t.spec().family()) << ',' << t.spec().n() << ',' << route_name(t.route()) << ',' << i << ','
         << t[i].str() << '\n';
    }
  } else {
    os << t.spec().name() << " [" << route_name(t.route()) << "] m=" << t.spec().m() << " i_max=" << t.spec().i_max()
       << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i].str();
    os << "\ntotal " << t.total().str() << '\n';
  }
}

int cmd_count(const std::string& family_name, int n, const std::string& route, const std::string& format,
              const ParallelOptions& par, const std::string& out_path) {
  const TypeSpec spec = TypeSpec::make(parse_family(family_name), n);
  std::vector<CoefficientTable> tables;
  for (Route r : routes_for(spec.family(), route)) tables.push_back(compute(spec, r, par));
  Output out(out_path);
  if (format == "json" && tables.size() > 1) {
    json arr = json::array();
    for (const auto& t : tables) arr.push_back(to_json(t));
    out.stream() << arr.dump() << '\n';
  } else {
    for (const auto& t : tables) render(t, format, out.stream());
  }
  for (const auto& t : tables) {
    if (!t.same_counts(tables.front())) {
      std::cerr << "routes disagree: " << route_name(tables.front().route()) << " vs " << route_name(t.route())
                << '\n';
      return kMismatch;
    }
  }
  if (tables.size() > 1) std::cerr << "all " << tables.size() << " routes agree\n";
  return kOk;
}

int cmd_curve(int n, const std::string& step_text, const ParallelOptions& par, const std::string& out_path) {
  const Rational step = parse_rational(step_text);
  if (step <= 0 || step >= 1) throw UsageError("--step must lie in (0, 1)");
  const auto p = family_polynomials(n, par);
  Output out(out_path);
  const auto samples = emit_curve(p[0], p[1], p[2], step, &out.stream());
  const auto grid = interior_grid(step);
  const auto b = find_order_violation(p[0], p[1], p[2], grid.front(), grid.back(), step);
  std::ostream& log = out.to_file() ? std::cout : std::cerr;
  if (out.to_file()) log << "wrote " << samples.size() << " rows to " << out_path << '\n';
  log << "chain P_A > P_B > P_C, P_A - P_B > P_B - P_C: ";
  if (!b.ever_stable()) {
    log << "never stable on the grid\n";
  } else if (!b.last_failure) {
    log << "holds at every grid point\n";
  } else {
    log << "chain boundary in [" << format_grid(to_double(*b.last_failure)) << ", "
        << format_grid(to_double(*b.first_stable)) << "]\n";
  }
  return kOk;
}

int cmd_verify(const std::string& suite, int n, const std::string& format, const ParallelOptions& par) {
  VerifyOptions opt;
  opt.n = n;
  opt.parallel = par;
  const auto checks = run_suite(suite, opt);
  if (format == "json") {
    std::cout << to_json(checks).dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.instance;
      if (!c.pass) std::cout << "  claimed " << c.claimed << ", computed " << c.computed;
      std::cout << '\n';
    }
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass;
    std::cout << passed << "/" << checks.size() << " checks passed\n";
  }
  return all_pass(checks) ? kOk : kMismatch;
}

int cmd_omega(const std::string& family_name, int n, const std::string& literal, bool tilde) {
  const TypeSpec spec = TypeSpec::make(parse_family(family_name), n);
  const ValueSet xset = ValueSet::parse(literal);
  const OmegaSet o = tilde ? omega_tilde(spec, xset) : omega(spec, xset);
  std::cout << to_json(o).dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts pertinent binary matrices and related least-change probabilities."};
  app.require_subcommand(1);

  std::string family = "C";
  int n = 4;
  std::string route = "enumeration";
  std::string format = "text";
  std::string out_path;
  std::string step = "1/100";
  std::string suite;
  std::string values;
  bool tilde = false;
  unsigned workers = 0;

  auto* count = app.add_subcommand("count", "coefficient table F/G/H for one family and dimension");
  count->add_option("--family", family, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
  count->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, kMaxSeriesDim));
  count->add_option("--route", route, "enumeration, dag, gf or all")
      ->check(CLI::IsMember({"enumeration", "dag", "gf", "all"}));
  count->add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  count->add_option("--out", out_path, "output file");

  auto* curve = app.add_subcommand("curve", "CSV of P_A, P_B, P_C on an interior grid");
  curve->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, kMaxEnumerationDim));
  curve->add_option("--step", step, "grid step, decimal or fraction");
  curve->add_option("--out", out_path, "CSV file");

  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", n, "upper dimension for exhaustive suites")->check(CLI::Range(1, kMaxEnumerationDim));
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* om = app.add_subcommand("omega", "least-change set for a value set, as JSON");
  om->add_option("--family", family, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
  om->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 5));
  om->add_option("--values", values, "e.g. 0,1/2@1/2,2@1/2 or [0,2]")->required();
  om->add_flag("--tilde", tilde, "binarized set");

  for (auto* sub : {count, curve, verify}) sub->add_option("--workers", workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  ParallelOptions par;
  par.workers = workers;
  try {
    if (*count) return cmd_count(family, n, route, format, par, out_path);
    if (*curve) return cmd_curve(n, step, par, out_path);
    if (*verify) return cmd_verify(suite, n, format, par);
    return cmd_omega(family, n, values, tilde);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // SpecViolation, ParseError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {  // DimensionError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

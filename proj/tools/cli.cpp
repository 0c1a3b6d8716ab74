#include "cli.hpp"

#include "skewcorr/measure.hpp"
#include "skewcorr/state_io.hpp"
#include "skewcorr/states.hpp"
#include "skewcorr/sweep.hpp"
#include "skewcorr/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace skewcorr::cli {

namespace {

/// Raised for option combinations that parse but make no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SKEWCORR_SEED")) {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
    throw UsageError("SKEWCORR_SEED is not an unsigned integer: '" + s + "'");
  }
  return JadOptions{}.seed;
}

struct JadFlags {
  int restarts = JadOptions{}.restarts;
  double tol = JadOptions{}.rotation_tolerance;
  int max_sweeps = JadOptions{}.max_sweeps;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--restarts", restarts, "Random restarts besides the identity start")->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", tol, "Rotation tolerance ending the Jacobi sweeps")->check(CLI::PositiveNumber);
    cmd->add_option("--max-sweeps", max_sweeps, "Sweep cap per run")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Seed (default: $SKEWCORR_SEED or built-in)");
  }

  JadOptions options() const {
    JadOptions o;
    o.restarts = restarts;
    o.rotation_tolerance = tol;
    o.max_sweeps = max_sweeps;
    o.seed = seed ? *seed : default_seed();
    return o;
  }
};

nlohmann::json basis_json(const std::vector<ComplexVector>& basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : basis) {
    nlohmann::json vec = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) vec.push_back({v(i).real(), v(i).imag()});
    out.push_back(vec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string input;
  std::string family;
  std::string method = "auto";
  std::string write_state;
  bool json = false;
  JadFlags jad;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  if (a.input.empty() == a.family.empty()) throw UsageError("compute: give exactly one of --input or --family");
  const JadOptions opts = a.jad.options();
  const DensityMatrix rho = a.input.empty() ? make_state(parse_family_spec(a.family)) : read_state_file(a.input);
  if (!a.write_state.empty()) write_state_file(a.write_state, rho);

  CorrelationResult res;
  if (a.method == "auto") {
    res = quantum_correlation(rho, opts);
  } else if (a.method == "jad") {
    res = q_general(rho, opts);
  } else if (a.method == "qubit") {
    if (rho.dim_a() != 2) throw UsageError("compute: --method qubit needs m = 2");
    res = q_qubit_qudit(rho);
  } else if (a.method == "pure") {
    if (rho.purity() <= 1.0 - 1e-12) throw UsageError("compute: --method pure needs a pure state");
    const auto& eig = rho.spectrum();
    res = q_pure(eig.vectors.col(eig.vectors.cols() - 1).normalized(), rho.dim_a(), rho.dim_b());
  } else {
    throw UsageError("compute: unknown method '" + a.method + "'");
  }

  const JadResult* jr = res.diagnostics ? &*res.diagnostics : nullptr;
  if (a.json) {
    nlohmann::json doc = {{"q", res.q},
                          {"method", std::string(to_string(res.method))},
                          {"m", rho.dim_a()},
                          {"n", rho.dim_b()},
                          {"optimal_basis", basis_json(res.optimal_basis)}};
    if (jr) {
      doc["sweeps_used"] = jr->sweeps_used;
      doc["rotations_used"] = jr->rotations_used;
      doc["converged"] = jr->converged;
      doc["restart_index"] = jr->restart_index;
      doc["objective"] = jr->objective;
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << "q=" << fixed6(res.q) << '\n'
      << "q_full=" << format_double(res.q) << '\n'
      << "method=" << to_string(res.method) << '\n'
      << "dims=" << rho.dim_a() << "x" << rho.dim_b() << '\n';
  if (jr) {
    out << "sweeps_used=" << jr->sweeps_used << '\n'
        << "rotations_used=" << jr->rotations_used << '\n'
        << "converged=" << (jr->converged ? "true" : "false") << '\n'
        << "restart_index=" << jr->restart_index << '\n';
  }
  out << "optimal_basis:\n";
  for (std::size_t k = 0; k < res.optimal_basis.size(); ++k) {
    out << "  |" << k << ">";
    for (Eigen::Index i = 0; i < res.optimal_basis[k].size(); ++i) {
      const Complex z = res.optimal_basis[k](i);
      out << ' ' << format_double(z.real()) << (z.imag() < 0 ? "-" : "+") << format_double(std::abs(z.imag()))
          << 'i';
    }
    out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep / figures

struct SweepArgs {
  std::string family;
  int m = 2;
  double from = 0.0;
  double to = 1.0;
  int steps = 101;
  std::string out_file;
  int threads = 1;
  JadFlags jad;
};

void write_csv_file(const std::string& path, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f.imbue(std::locale::classic());
  write_sweep_csv(f, config, rows);
}

double max_gap(const std::vector<SweepRow>& rows) {
  double g = 0.0;
  for (const auto& r : rows)
    if (r.abs_gap) g = std::max(g, *r.abs_gap);
  return g;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.family != "werner" && a.family != "isotropic" && a.family != "ppt")
    throw UsageError("sweep: unknown family '" + a.family + "' (werner, isotropic, ppt)");
  SweepConfig config{a.family, a.family == "ppt" ? 3 : a.m, a.from, a.to, a.steps, a.jad.options()};
  std::vector<SweepRow> rows;
  try {
    rows = run_sweep(config, a.threads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.out_file.empty() || a.out_file == "-") {
    write_sweep_csv(out, config, rows);
  } else {
    write_csv_file(a.out_file, config, rows);
    out << "wrote " << rows.size() << " rows to " << a.out_file << " (max abs_gap " << format_double(max_gap(rows))
        << ")\n";
  }
  return kOk;
}

struct FigureArgs {
  std::string which;
  std::string out_dir = ".";
  int threads = 1;
  JadFlags jad;
};

int cmd_figures(const FigureArgs& a, std::ostream& out) {
  std::vector<SweepConfig> configs;
  try {
    configs = figure_configs(a.which, a.jad.options());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::filesystem::create_directories(a.out_dir);
  for (const auto& config : configs) {
    const auto rows = run_sweep(config, a.threads);
    const std::string path = (std::filesystem::path(a.out_dir) / figure_file_name(a.which, config)).string();
    write_csv_file(path, config, rows);
    out << path << " rows=" << rows.size() << " max_abs_gap=" << format_double(max_gap(rows)) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  std::string suite = "all";
  int cases = 50;
  std::string input;
  JadFlags jad;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  if (a.suite != "oracle" && a.suite != "properties" && a.suite != "all")
    throw UsageError("validate: unknown suite '" + a.suite + "'");
  ValidationConfig config;
  config.jad = a.jad.options();
  config.seed = config.jad.seed;
  config.cases = a.cases;
  if (!a.input.empty()) config.extra_state = read_state_file(a.input);

  std::vector<SuiteReport> reports;
  if (a.suite != "oracle") {
    auto r = run_property_suite(config);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (a.suite != "properties") {
    auto r = run_oracle_suite(config);
    reports.insert(reports.end(), r.begin(), r.end());
  }

  bool all_ok = true;
  out << std::left << std::setw(12) << "suite" << std::setw(32) << "check" << std::setw(10) << "passed"
      << std::setw(25) << "worst" << "tolerance\n";
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    out << std::setw(12) << r.suite << std::setw(32) << r.check << std::setw(10)
        << (std::to_string(r.passed) + "/" + std::to_string(r.total)) << std::setw(25) << format_double(r.worst)
        << format_double(r.tolerance) << (r.ok() ? "" : "  FAIL") << '\n';
  }
  out << (all_ok ? "all checks passed" : "validation FAILED") << '\n';
  return all_ok ? kOk : kSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew-information quantum correlation of bipartite states"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute Q for one state");
  auto* in_opt = c->add_option("--input", compute.input, "State file (JSON: m, n, rho)");
  auto* fam_opt = c->add_option("--family", compute.family, "Family spec, e.g. werner:m=3,x=0.5");
  in_opt->excludes(fam_opt);
  c->add_option("--method", compute.method, "auto|jad|qubit|pure");
  c->add_option("--write-state", compute.write_state, "Also write the state to this JSON file");
  c->add_flag("--json", compute.json, "Machine-readable output");
  compute.jad.attach(c);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Scan a family parameter and write CSV");
  s->add_option("--family", sweep.family, "werner|isotropic|ppt")->required();
  s->add_option("--m", sweep.m, "Local dimension (werner/isotropic)")->check(CLI::Range(2, 64));
  s->add_option("--from", sweep.from, "First parameter value")->required();
  s->add_option("--to", sweep.to, "Last parameter value")->required();
  s->add_option("--steps", sweep.steps, "Number of grid points")->check(CLI::PositiveNumber);
  s->add_option("--out", sweep.out_file, "CSV file ('-' or omitted: stdout)");
  s->add_option("--threads", sweep.threads, "Worker threads for grid points")->check(CLI::PositiveNumber);
  sweep.jad.attach(s);

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Run the invariant suites");
  v->add_option("--suite", validate.suite, "oracle|properties|all");
  v->add_option("--cases", validate.cases, "Seeded cases per check")->check(CLI::PositiveNumber);
  v->add_option("--input", validate.input, "Extra state file folded into the property checks");
  validate.jad.attach(v);

  FigureArgs figures;
  auto* f = app.add_subcommand("figures", "Write the CSV data behind the figures");
  f->add_option("--which", figures.which, "fig1|fig2a|fig2b")->required();
  f->add_option("--out", figures.out_dir, "Output directory");
  f->add_option("--threads", figures.threads, "Worker threads for grid points")->check(CLI::PositiveNumber);
  figures.jad.attach(f);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (s->parsed()) return cmd_sweep(sweep, out);
    if (v->parsed()) return cmd_validate(validate, out);
    if (f->parsed()) return cmd_figures(figures, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid state: " << e.what() << '\n';
    return kStateInvalid;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Out-of-range family parameters and similar.
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSuiteFailure;
  }
  return kUsage;
}

}  // namespace skewcorr::cli

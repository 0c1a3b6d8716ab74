#include "skewcorr/sweep.hpp"

#include "skewcorr/oracle.hpp"
#include "skewcorr/state_io.hpp"
#include "skewcorr/states.hpp"

#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>

namespace skewcorr {

namespace {

DensityMatrix family_state(const std::string& family, int m, double param) {
  if (family == "werner") return werner(m, param);
  if (family == "isotropic") return isotropic(m, param);
  if (family == "ppt") return ppt_family(param);
  throw std::invalid_argument("sweep: unknown family '" + family + "'");
}

SweepRow evaluate(const SweepConfig& config, double param) {
  const CorrelationResult res = q_general(family_state(config.family, config.m, param), config.jad);
  SweepRow row;
  row.param = param;
  row.q_computed = res.q;
  row.method = res.method;
  row.sweeps_used = res.diagnostics ? res.diagnostics->sweeps_used : 0;
  row.q_analytic = analytic_value(config.family, config.m, param);
  if (row.q_analytic) row.abs_gap = std::abs(row.q_computed - *row.q_analytic);
  return row;
}

void check_config(const SweepConfig& config) {
  if (config.family != "werner" && config.family != "isotropic" && config.family != "ppt")
    throw std::invalid_argument("sweep: unknown family '" + config.family + "'");
  if (config.steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
  config.jad.validate();
}

}  // namespace

std::vector<double> sweep_grid(double from, double to, int steps) {
  if (steps < 1) throw std::invalid_argument("sweep_grid: steps must be >= 1");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    grid[i] = steps == 1 ? from : (i == steps - 1 ? to : from + (to - from) * i / (steps - 1));
  return grid;
}

std::optional<double> analytic_value(const std::string& family, int m, double param) {
  if (family == "werner") return analytic_werner(m, param);
  if (family == "isotropic") return analytic_isotropic(m, param);
  if (family == "ppt") return analytic_ppt(param);
  return std::nullopt;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads) {
  check_config(config);
  const std::vector<double> grid = sweep_grid(config.from, config.to, config.steps);
  // Surface domain errors before entering the parallel region.
  family_state(config.family, config.m, grid.front());
  family_state(config.family, config.m, grid.back());

  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const int n = static_cast<int>(grid.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
  for (int i = 0; i < n; ++i) {
    try {
      rows[i] = evaluate(config, grid[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // Rethrow the error of the lowest grid index, as the serial loop would.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) {
  check_config(config);
  std::vector<SweepRow> rows;
  for (double p : sweep_grid(config.from, config.to, config.steps)) rows.push_back(evaluate(config, p));
  return rows;
}

void write_sweep_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  out << "# family=" << config.family << '\n'
      << "# m=" << config.m << '\n'
      << "# from=" << format_double(config.from) << '\n'
      << "# to=" << format_double(config.to) << '\n'
      << "# steps=" << config.steps << '\n'
      << "# rotation_tolerance=" << format_double(config.jad.rotation_tolerance) << '\n'
      << "# max_sweeps=" << config.jad.max_sweeps << '\n'
      << "# restarts=" << config.jad.restarts << '\n'
      << "# seed=" << config.jad.seed << '\n'
      << "param,q_computed,q_analytic,abs_gap,method,sweeps_used\n";
  for (const auto& r : rows) {
    out << format_double(r.param) << ',' << format_double(r.q_computed) << ','
        << (r.q_analytic ? format_double(*r.q_analytic) : "") << ','
        << (r.abs_gap ? format_double(*r.abs_gap) : "") << ',' << to_string(r.method) << ','
        << r.sweeps_used << '\n';
  }
}

double locate_ppt_kink(const std::vector<SweepRow>& rows, const JadOptions& opts, double tolerance) {
  constexpr double kOnPlateau = 1e-9;
  std::size_t first = rows.size();
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].param > 2.5 && std::abs(rows[i].q_computed - kPptPlateau) < kOnPlateau &&
        rows[i - 1].q_computed < kPptPlateau - kOnPlateau) {
      first = i;
      break;
    }
  if (first == rows.size()) throw std::runtime_error("locate_ppt_kink: no plateau onset in sweep");

  double lo = rows[first - 1].param, hi = rows[first].param;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double q = q_general(ppt_family(mid), opts).q;
    (q < kPptPlateau - kOnPlateau ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SweepConfig> figure_configs(const std::string& which, const JadOptions& opts) {
  std::vector<SweepConfig> out;
  if (which == "fig1") {
    out.push_back({"ppt", 3, 2.0, 5.0, 301, opts});
  } else if (which == "fig2a" || which == "fig2b") {
    for (int m = 2; m <= 10; ++m) {
      if (which == "fig2a")
        out.push_back({"werner", m, -1.0, 1.0, 101, opts});
      else
        out.push_back({"isotropic", m, 0.0, 1.0, 101, opts});
    }
  } else {
    throw std::invalid_argument("unknown figure '" + which + "'");
  }
  return out;
}

std::string figure_file_name(const std::string& which, const SweepConfig& config) {
  if (which == "fig1") return "fig1_ppt.csv";
  return which + "_" + config.family + "_m" + std::to_string(config.m) + ".csv";
}

}  // namespace skewcorr

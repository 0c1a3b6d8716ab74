#pragma once

#include "skewcorr/jad.hpp"
#include "skewcorr/measure.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skewcorr {

struct SweepRow {
  double param = 0.0;
  double q_computed = 0.0;
  std::optional<double> q_analytic;
  std::optional<double> abs_gap;
  Method method = Method::general_jad;
  int sweeps_used = 0;
};

/// One-parameter family scan. `family` is werner, isotropic or ppt.
struct SweepConfig {
  std::string family;
  int m = 2;
  double from = 0.0;
  double to = 1.0;
  int steps = 101;
  JadOptions jad;
};

/// Uniform grid from..to with `steps` points (steps = 1 gives `from`).
std::vector<double> sweep_grid(double from, double to, int steps);

/// Evaluates every grid point with the JAD path; grid points run on up to
/// `threads` OpenMP threads, rows are returned in parameter order.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads = 1);

/// Same rows computed in a plain loop.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

/// Closed form for the family at `param`, if one exists.
std::optional<double> analytic_value(const std::string& family, int m, double param);

/// "# key=value" metadata lines, then
/// param,q_computed,q_analytic,abs_gap,method,sweeps_used
void write_sweep_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows);

/// Where the computed PPT curve reaches its plateau: brackets the first grid
/// row on the plateau and bisects on the JAD pipeline to `tolerance`.
double locate_ppt_kink(const std::vector<SweepRow>& rows, const JadOptions& opts, double tolerance = 1e-7);

/// Sweep configurations behind each figure: fig1 (one PPT curve), fig2a
/// (Werner, m = 2..10) and fig2b (isotropic, m = 2..10). Throws
/// std::invalid_argument for other names.
std::vector<SweepConfig> figure_configs(const std::string& which, const JadOptions& opts);

/// File name used for a figure's curve.
std::string figure_file_name(const std::string& which, const SweepConfig& config);

}  // namespace skewcorr

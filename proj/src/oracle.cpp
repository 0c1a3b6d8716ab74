#include "skewcorr/oracle.hpp"

#include "skewcorr/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace skewcorr {

namespace {

void require_range(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) throw std::invalid_argument(std::string(what) + ": parameter out of range");
}

}  // namespace

double analytic_werner(int m, double x) {
  if (m < 2) throw std::invalid_argument("analytic_werner: m must be >= 2");
  require_range(x, -1.0, 1.0, "analytic_werner");
  const double md = m;
  return (md - x - std::sqrt(md * md - 1.0) * std::sqrt(1.0 - x * x)) / (2.0 * (1.0 + md));
}

double analytic_isotropic(int m, double x) {
  if (m < 2) throw std::invalid_argument("analytic_isotropic: m must be >= 2");
  require_range(x, 0.0, 1.0, "analytic_isotropic");
  const double md = m;
  return (1.0 - 2.0 * std::sqrt(md * md - 1.0) * std::sqrt(x * (1.0 - x)) + (md * md - 2.0) * x) /
         (md * (1.0 + md));
}

double ppt_first_branch(double alpha) {
  require_range(alpha, 0.0, 5.0, "ppt_first_branch");
  return (21.0 - std::sqrt(6.0 * (5.0 - alpha)) - std::sqrt(6.0 * alpha) -
          3.0 * std::sqrt(alpha * (5.0 - alpha))) /
         31.5;
}

double ppt_branch_point() { return (15.0 + std::sqrt(136.0 * std::sqrt(94.0) - 1307.0)) / 6.0; }

double analytic_ppt(double alpha) {
  require_range(alpha, 2.0, 5.0, "analytic_ppt");
  return alpha <= ppt_branch_point() ? ppt_first_branch(alpha) : kPptPlateau;
}

double sudden_change_point(double tolerance) {
  // The first branch is symmetric about 2.5 and increasing above it.
  double lo = 2.5, hi = 5.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (ppt_first_branch(mid) < kPptPlateau ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void OracleBudget::validate() const {
  if (grid_points < 1 || restarts < 1 || refine_iters < 1)
    throw std::invalid_argument("OracleBudget: all budgets must be positive");
}

double direct_objective(const ComplexMatrix& sqrt_rho, const ComplexMatrix& w, int n) {
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  double total = 0.0;
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    const ComplexVector v = w.col(k);
    const ComplexMatrix proj = kron(v * v.adjoint(), id);
    const ComplexMatrix comm = sqrt_rho * proj - proj * sqrt_rho;
    // -1/2 Tr [S, K]^2 with [S, K] anti-Hermitian.
    total += -0.5 * (comm * comm).trace().real();
  }
  return total;
}

namespace {

// Right-multiplies columns p, q of w by a 2x2 unitary.
void rotate_columns(ComplexMatrix& w, int p, int q, const Eigen::Matrix2cd& r) {
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    const Complex xp = w(i, p), xq = w(i, q);
    w(i, p) = xp * r(0, 0) + xq * r(1, 0);
    w(i, q) = xp * r(0, 1) + xq * r(1, 1);
  }
}

Eigen::Matrix2cd plane_move(int generator, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix2cd r;
  if (generator == 0)
    r << c, -s, s, c;
  else
    r << c, Complex(0.0, s), Complex(0.0, s), c;
  return r;
}

double hill_climb(const ComplexMatrix& sqrt_rho, ComplexMatrix& w, int n, int passes) {
  const int m = static_cast<int>(w.cols());
  double best = direct_objective(sqrt_rho, w, n);
  double step = 0.4;
  for (int pass = 0; pass < passes && step > 1e-9; ++pass) {
    bool improved = false;
    for (int p = 0; p < m - 1; ++p)
      for (int q = p + 1; q < m; ++q)
        for (int gen = 0; gen < 2; ++gen)
          for (double sign : {1.0, -1.0}) {
            ComplexMatrix trial = w;
            rotate_columns(trial, p, q, plane_move(gen, sign * step));
            const double val = direct_objective(sqrt_rho, trial, n);
            if (val < best) {
              best = val;
              w = std::move(trial);
              improved = true;
            }
          }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

double brute_force_q(const DensityMatrix& rho, const OracleBudget& budget) {
  budget.validate();
  if (rho.dim() > 12) throw DimensionError("brute_force_q: limited to m*n <= 12");
  const int m = rho.dim_a(), n = rho.dim_b();
  const ComplexMatrix s = psd_sqrt(rho);
  if (m == 1) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  if (m == 2) {
    // Square (theta, phi) grid; |k0> = (cos t/2, e^{i phi} sin t/2).
    const int side = std::max(2, static_cast<int>(std::lround(std::sqrt(budget.grid_points))));
    ComplexMatrix best_w;
    for (int it = 0; it < side; ++it) {
      const double theta = std::numbers::pi * it / (side - 1);
      for (int ip = 0; ip < side; ++ip) {
        const double phi = 2.0 * std::numbers::pi * ip / side;
        const Complex e = std::polar(1.0, phi);
        ComplexMatrix w(2, 2);
        w << std::cos(theta / 2), -std::conj(e) * std::sin(theta / 2), e * std::sin(theta / 2),
            std::cos(theta / 2);
        const double val = direct_objective(s, w, n);
        if (val < best) {
          best = val;
          best_w = w;
        }
      }
    }
    best = std::min(best, hill_climb(s, best_w, n, budget.refine_iters));
    return best;
  }

  for (int r = 0; r < budget.restarts; ++r) {
    Rng rng(derive_seed(budget.seed, static_cast<std::uint64_t>(r)));
    ComplexMatrix w = haar_unitary(m, rng);
    best = std::min(best, hill_climb(s, w, n, budget.refine_iters));
  }
  return best;
}

}  // namespace skewcorr

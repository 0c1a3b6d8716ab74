#pragma once

#include "skewcorr/linalg.hpp"

#include <cstdint>
#include <vector>

namespace skewcorr {

/// Closed-form Q of the Werner family on C^m (x) C^m.
double analytic_werner(int m, double x);

/// Closed-form Q of the isotropic family on C^m (x) C^m.
double analytic_isotropic(int m, double x);

/// Branch of the PPT-family closed form valid below the sudden-change point:
/// (21 - sqrt(6(5 - a)) - sqrt(6a) - 3 sqrt(a(5 - a))) / 31.5
double ppt_first_branch(double alpha);

/// Plateau value 4/21 of the PPT family above the sudden-change point.
inline constexpr double kPptPlateau = 4.0 / 21.0;

/// (15 + sqrt(136 sqrt(94) - 1307)) / 6
double ppt_branch_point();

/// Piecewise closed form of Q for the PPT family, alpha in [2, 5].
double analytic_ppt(double alpha);

/// Bisection for the alpha > 2.5 where the first branch meets the plateau.
double sudden_change_point(double tolerance = 1e-12);

struct OracleBudget {
  int grid_points = 10000;  // Bloch-sphere samples for m = 2
  int restarts = 64;        // random starts for m >= 3
  int refine_iters = 200;   // hill-climbing passes per start
  std::uint64_t seed = 1;

  void validate() const;
};

/// sum_k I(rho, |k><k| (x) 1) evaluated from commutators, with |k> the columns of w.
double direct_objective(const ComplexMatrix& sqrt_rho, const ComplexMatrix& w, int n);

/// Minimum of the defining objective found by direct search over bases of A:
/// a Bloch-sphere grid for m = 2, seeded random starts for m >= 3, each
/// followed by plane-rotation hill climbing. Upper-bounds the true Q.
double brute_force_q(const DensityMatrix& rho, const OracleBudget& budget = {});

}  // namespace skewcorr

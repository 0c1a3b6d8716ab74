#pragma once

#include "skewcorr/linalg.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skewcorr {

enum class Family {
  werner,
  isotropic,
  ppt,
  max_entangled,
  pure_schmidt,
  classical_quantum,
  random_mixed,
};

std::string_view to_string(Family f);
/// Throws std::invalid_argument for unknown names.
Family family_from_string(std::string_view name);

/// Everything needed to regenerate a state deterministically.
struct FamilySpec {
  Family family = Family::werner;
  int m = 2;
  int n = 2;
  double param = 0.0;          // x for werner/isotropic, alpha for ppt
  std::vector<double> extras;  // Schmidt coefficients (pure_schmidt)
  int rank = 0;                // random_mixed; 0 means full rank
  std::uint64_t seed = 0;      // random_mixed, classical_quantum
};

DensityMatrix make_state(const FamilySpec& spec);

/// Swap operator on C^m (x) C^m.
ComplexMatrix swap_operator(int m);

/// (m - x)/(m^3 - m) 1 + (m x - 1)/(m^3 - m) V, x in [-1, 1].
DensityMatrix werner(int m, double x);

/// (1 - x)/(m^2 - 1) 1 + (m^2 x - 1)/(m^2 - 1) |Phi><Phi|, x in [0, 1].
DensityMatrix isotropic(int m, double x);

/// 3x3 family 2/7 |Phi_3><Phi_3| + alpha/7 rho_+ + (5 - alpha)/7 rho_-, alpha in [2, 5].
/// Separable for alpha <= 3, PPT-entangled on (3, 4], NPT on (4, 5].
DensityMatrix ppt_family(double alpha);

/// (1/sqrt(m)) sum_k |kk>
ComplexVector max_entangled(int m);

/// sum_i mu_i |ii> on r x r, r = mu.size(); requires sum mu_i^2 = 1, mu_i >= 0.
ComplexVector pure_from_schmidt(const std::vector<double>& mu);

/// sum_j lambda_j |k_j><k_j| (x) rho_j.
DensityMatrix classical_quantum(const std::vector<double>& weights,
                                const std::vector<ComplexVector>& basis,
                                const std::vector<ComplexMatrix>& b_states);

/// G G^dagger / Tr(G G^dagger), G an (mn x rank) seeded Ginibre matrix.
DensityMatrix random_mixed(int m, int n, int rank, std::uint64_t seed);

/// Haar random unitary of size d.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

/// Haar random unit vector in C^m (x) C^n.
ComplexVector random_pure(int m, int n, std::uint64_t seed);

/// Classical-quantum state on a Haar-random basis of A with random weights and
/// random (full-rank) states on B.
DensityMatrix random_classical_quantum(int m, int n, std::uint64_t seed);

}  // namespace skewcorr

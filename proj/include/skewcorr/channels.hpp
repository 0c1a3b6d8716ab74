#pragma once

#include "skewcorr/linalg.hpp"

#include <cstdint>
#include <vector>

namespace skewcorr {

/// CPTP map on subsystem B in Kraus form.
struct KrausChannel {
  int dim = 0;
  std::vector<ComplexMatrix> kraus;

  /// ||sum_i E_i^dagger E_i - 1||_F
  double completeness_residual() const;
  /// Throws ValidationError when the residual exceeds 1e-10.
  void validate() const;

  static KrausChannel identity(int n);
  static KrausChannel unitary(const ComplexMatrix& u);
  /// Kraus set {|i><j| / sqrt(n)}: maps every state to 1/n.
  static KrausChannel full_depolarizing(int n);
  /// Kraus set {|i><i|}: removes all coherences in the computational basis.
  static KrausChannel dephasing(int n);
};

/// (1_m (x) Phi)(rho) = sum_i (1 (x) E_i) rho (1 (x) E_i)^dagger
DensityMatrix apply_on_b(const DensityMatrix& rho, const KrausChannel& channel);

/// First n columns of a seeded Haar unitary on n*num_kraus dimensions, cut
/// into num_kraus square blocks.
KrausChannel random_channel(int n, int num_kraus, std::uint64_t seed);

/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger
DensityMatrix local_unitary(const DensityMatrix& rho, const ComplexMatrix& ua, const ComplexMatrix& ub);

}  // namespace skewcorr

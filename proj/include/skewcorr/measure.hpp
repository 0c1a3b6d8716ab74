#pragma once

#include "skewcorr/jad.hpp"
#include "skewcorr/linalg.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace skewcorr {

enum class Method { general_jad, qubit_qudit, pure };

std::string_view to_string(Method m);

/// A computed Q value outside [-1e-12, 1 + 1e-12].
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorrelationResult {
  double q = 0.0;
  Method method = Method::general_jad;
  /// Orthonormal basis {|k>} of A attaining q with K_k = |k><k| (x) 1_n.
  std::vector<ComplexVector> optimal_basis;
  /// Set for Method::general_jad.
  std::optional<JadResult> diagnostics;
};

struct CorrelationT {
  Eigen::Matrix3d t;
};

/// Pauli matrix sigma_i, i in {1, 2, 3} = {x, y, z}.
ComplexMatrix pauli(int i);

/// |k><k| (x) 1_n
ComplexMatrix local_projector(const ComplexVector& k, int n);

/// I(rho, O) = -1/2 Tr [sqrt(rho), O]^2 = ||[sqrt(rho), O]||_F^2 / 2.
double skew_information(const DensityMatrix& rho, const ComplexMatrix& observable);

/// sum_k I(rho, |k><k| (x) 1) for an orthonormal basis of A; the quantity
/// minimized by Q.
double correlation_at_basis(const DensityMatrix& rho, const std::vector<ComplexVector>& basis);

/// Q via joint approximate diagonalization of the blocks of sqrt(rho).
CorrelationResult q_general(const DensityMatrix& rho, const JadOptions& opts = {});

/// T_ij = Tr sqrt(rho) (sigma_i (x) 1) sqrt(rho) (sigma_j (x) 1); requires m = 2.
CorrelationT correlation_matrix_t(const DensityMatrix& rho);

/// Closed form (1 - lambda_max(T)) / 2 for m = 2.
CorrelationResult q_qubit_qudit(const DensityMatrix& rho);

/// 1 - Tr rho_A^2 for a pure state psi on C^m (x) C^n.
CorrelationResult q_pure(const ComplexVector& psi, int m, int n);

/// Dispatch: pure states (purity > 1 - 1e-12) -> q_pure, m = 2 -> q_qubit_qudit,
/// otherwise q_general.
CorrelationResult quantum_correlation(const DensityMatrix& rho, const JadOptions& opts = {});

/// F_Qk = -Tr [sqrt(rho), K_k]^2 for each basis vector.
std::vector<double> fisher_per_phase(const DensityMatrix& rho, const std::vector<ComplexVector>& basis);

bool is_classical_quantum(const DensityMatrix& rho, double tol = 1e-9, const JadOptions& opts = {});

/// Maps rounding noise in [-1e-12, 0) to 0 and (1, 1 + 1e-12] to 1; anything
/// further out throws NumericalError.
double clip_q(double raw);

}  // namespace skewcorr

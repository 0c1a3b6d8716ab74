#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Shapes that do not fit together (non-square, mismatched subsystem sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that is well-formed but is not a quantum state / valid operator.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {
// Relative Frobenius distance from M^dagger below which M is symmetrized.
inline constexpr double kHermitian = 1e-10;
// Eigenvalues in [-kNegativeEigen, 0) are clamped to zero, below are rejected.
inline constexpr double kNegativeEigen = 1e-12;
// |Tr rho - 1| up to which the trace is silently renormalized.
inline constexpr double kTrace = 1e-8;
}  // namespace tol

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M^dagger)/2 before decomposition; non-square or non-finite input throws.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// ||M - M^dagger||_F / max(1, ||M||_F)
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, (A x B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Validated bipartite state on C^m (x) C^n. Composite index is a*n + b.
///
/// Construction symmetrizes matrices that are Hermitian up to
/// `tol::kHermitian`, renormalizes traces within `tol::kTrace` of one and
/// rejects anything with an eigenvalue below `-tol::kNegativeEigen`. The
/// spectrum computed during validation is kept so that `psd_sqrt` does not
/// decompose the matrix a second time.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(int m, int n, const ComplexMatrix& mat);
  /// |psi><psi| for a normalized vector of length m*n.
  static DensityMatrix from_pure(int m, int n, const ComplexVector& psi);

  int dim_a() const { return m_; }
  int dim_b() const { return n_; }
  int dim() const { return m_ * n_; }
  const ComplexMatrix& matrix() const { return mat_; }
  const HermitianEigen& spectrum() const { return eig_; }

  /// Tr rho^2
  double purity() const;

 private:
  DensityMatrix(int m, int n, ComplexMatrix mat, HermitianEigen eig)
      : m_(m), n_(n), mat_(std::move(mat)), eig_(std::move(eig)) {}

  int m_;
  int n_;
  ComplexMatrix mat_;
  HermitianEigen eig_;
};

/// Positive square root of rho; eigenvalues in [-1e-12, 0) are treated as 0.
ComplexMatrix psd_sqrt(const DensityMatrix& rho);
/// Same for an arbitrary Hermitian PSD matrix (throws ValidationError otherwise).
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Tr_B rho, an m x m matrix.
ComplexMatrix partial_trace_b(const DensityMatrix& rho);
/// Tr_A rho, an n x n matrix.
ComplexMatrix partial_trace_a(const DensityMatrix& rho);

/// The n^2 operators A_ij = (1_m (x) <i|) S (1_m (x) |j>) on subsystem A.
class BlockSet {
 public:
  BlockSet(int m, int n, std::vector<ComplexMatrix> blocks);

  int dim_a() const { return m_; }
  int dim_b() const { return n_; }
  const ComplexMatrix& operator()(int i, int j) const { return blocks_[i * n_ + j]; }
  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

 private:
  int m_;
  int n_;
  std::vector<ComplexMatrix> blocks_;
};

BlockSet extract_blocks(const ComplexMatrix& s, int m, int n);

}  // namespace skewcorr

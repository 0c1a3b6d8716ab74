#include "skewcorr/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace skewcorr {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError("hermitian_eig: matrix must be square and non-empty");
  if (!all_finite(m)) throw ValidationError("hermitian_eig: non-finite entries");

  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw ValidationError("hermitian_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionError("commutator: operands must be square and of equal size");
  return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  constexpr auto kMax = std::numeric_limits<Eigen::Index>::max();
  if (a.rows() != 0 && b.rows() > kMax / a.rows()) throw DimensionError("kron: size overflow");
  if (a.cols() != 0 && b.cols() > kMax / a.cols()) throw DimensionError("kron: size overflow");
  if (!all_finite(a) || !all_finite(b)) throw ValidationError("kron: non-finite entries");

  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix DensityMatrix::from_matrix(int m, int n, const ComplexMatrix& mat) {
  if (m < 1 || n < 1) throw DimensionError("DensityMatrix: subsystem dimensions must be >= 1");
  const Eigen::Index d = static_cast<Eigen::Index>(m) * n;
  if (mat.rows() != d || mat.cols() != d) {
    std::ostringstream os;
    os << "DensityMatrix: expected " << d << "x" << d << " matrix for m=" << m << ", n=" << n
       << ", got " << mat.rows() << "x" << mat.cols();
    throw DimensionError(os.str());
  }
  if (!all_finite(mat)) throw ValidationError("DensityMatrix: non-finite entries");

  const double defect = hermiticity_defect(mat);
  if (defect > tol::kHermitian) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (relative defect " << defect << ")";
    throw ValidationError(os.str());
  }
  ComplexMatrix sym = 0.5 * (mat + mat.adjoint());

  const double tr = sym.trace().real();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " differs from 1";
    throw ValidationError(os.str());
  }
  sym /= tr;

  HermitianEigen eig = hermitian_eig(sym);
  if (eig.values(0) < -tol::kNegativeEigen) {
    std::ostringstream os;
    os << "DensityMatrix: not positive semidefinite (eigenvalue " << eig.values(0) << ")";
    throw ValidationError(os.str());
  }
  return DensityMatrix(m, n, std::move(sym), std::move(eig));
}

DensityMatrix DensityMatrix::from_pure(int m, int n, const ComplexVector& psi) {
  if (psi.size() != static_cast<Eigen::Index>(m) * n)
    throw DimensionError("DensityMatrix::from_pure: vector length must be m*n");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw ValidationError("DensityMatrix::from_pure: state vector is not normalized");
  return from_matrix(m, n, psi * psi.adjoint());
}

double DensityMatrix::purity() const {
  // Tr rho^2 = ||rho||_F^2 for Hermitian rho.
  return mat_.squaredNorm();
}

namespace {

ComplexMatrix sqrt_from_spectrum(const HermitianEigen& eig) {
  RealVector root(eig.values.size());
  // Numerical-rank cutoff: sqrt() would amplify rounding noise of size
  // eps * lambda_max in the null space to ~1e-8.
  const double top = eig.values.size() ? std::max(eig.values.maxCoeff(), 0.0) : 0.0;
  const double noise = static_cast<double>(root.size()) * std::numeric_limits<double>::epsilon() * top;
  for (Eigen::Index k = 0; k < root.size(); ++k) {
    const double v = eig.values(k);
    if (v < -tol::kNegativeEigen) {
      std::ostringstream os;
      os << "psd_sqrt: eigenvalue " << v << " below clamping threshold";
      throw ValidationError(os.str());
    }
    root(k) = v > noise ? std::sqrt(v) : 0.0;
  }
  ComplexMatrix s = eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

}  // namespace

ComplexMatrix psd_sqrt(const DensityMatrix& rho) { return sqrt_from_spectrum(rho.spectrum()); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  if (m.rows() == m.cols() && hermiticity_defect(m) > tol::kHermitian)
    throw ValidationError("psd_sqrt: matrix is not Hermitian");
  return sqrt_from_spectrum(hermitian_eig(m));
}

ComplexMatrix partial_trace_b(const DensityMatrix& rho) {
  const int m = rho.dim_a(), n = rho.dim_b();
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < n; ++k) out(a, b) += r(a * n + k, b * n + k);
  return out;
}

ComplexMatrix partial_trace_a(const DensityMatrix& rho) {
  const int m = rho.dim_a(), n = rho.dim_b();
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) out(i, j) += r(k * n + i, k * n + j);
  return out;
}

BlockSet::BlockSet(int m, int n, std::vector<ComplexMatrix> blocks)
    : m_(m), n_(n), blocks_(std::move(blocks)) {
  if (blocks_.size() != static_cast<std::size_t>(n) * n)
    throw DimensionError("BlockSet: expected n^2 blocks");
  for (const auto& b : blocks_)
    if (b.rows() != m || b.cols() != m) throw DimensionError("BlockSet: blocks must be m x m");
}

BlockSet extract_blocks(const ComplexMatrix& s, int m, int n) {
  if (m < 1 || n < 1 || s.rows() != static_cast<Eigen::Index>(m) * n || s.cols() != s.rows())
    throw DimensionError("extract_blocks: matrix size does not match m*n");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix a(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) a(r, c) = s(r * n + i, c * n + j);
      blocks.push_back(std::move(a));
    }
  }
  return BlockSet(m, n, std::move(blocks));
}

}  // namespace skewcorr

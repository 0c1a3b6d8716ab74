#include "skewcorr/measure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace skewcorr {

namespace {

constexpr double kPurityThreshold = 1.0 - 1e-12;
constexpr double kClipSlack = 1e-12;

double commutator_mass(const ComplexMatrix& sqrt_rho, const ComplexMatrix& observable) {
  return commutator(sqrt_rho, observable).squaredNorm();
}

void require_orthonormal(const std::vector<ComplexVector>& basis, int m) {
  if (static_cast<int>(basis.size()) != m)
    throw DimensionError("basis must contain exactly m vectors");
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != m) throw DimensionError("basis vector has wrong length");
    for (std::size_t k = 0; k <= j; ++k) {
      const double expect = j == k ? 1.0 : 0.0;
      if (std::abs(basis[k].dot(basis[j]) - expect) > 1e-10)
        throw ValidationError("basis is not orthonormal");
    }
  }
}

std::vector<ComplexVector> columns(const ComplexMatrix& v) {
  std::vector<ComplexVector> out;
  out.reserve(static_cast<std::size_t>(v.cols()));
  for (Eigen::Index k = 0; k < v.cols(); ++k) out.emplace_back(v.col(k));
  return out;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::general_jad:
      return "general_jad";
    case Method::qubit_qudit:
      return "qubit_qudit";
    case Method::pure:
      return "pure";
  }
  return "unknown";
}

double clip_q(double raw) {
  if (!std::isfinite(raw) || raw < -kClipSlack || raw > 1.0 + kClipSlack) {
    std::ostringstream os;
    os.precision(17);
    os << "quantum correlation " << raw << " outside [0, 1]";
    throw NumericalError(os.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

ComplexMatrix pauli(int i) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (i) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = Complex(0.0, -1.0);
      s(1, 0) = Complex(0.0, 1.0);
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

ComplexMatrix local_projector(const ComplexVector& k, int n) {
  return kron(k * k.adjoint(), ComplexMatrix::Identity(n, n));
}

double skew_information(const DensityMatrix& rho, const ComplexMatrix& observable) {
  if (observable.rows() != rho.dim() || observable.cols() != rho.dim())
    throw DimensionError("skew_information: observable size does not match the state");
  if (hermiticity_defect(observable) > tol::kHermitian)
    throw ValidationError("skew_information: observable is not Hermitian");
  return 0.5 * commutator_mass(psd_sqrt(rho), observable);
}

std::vector<double> fisher_per_phase(const DensityMatrix& rho, const std::vector<ComplexVector>& basis) {
  require_orthonormal(basis, rho.dim_a());
  const ComplexMatrix s = psd_sqrt(rho);
  std::vector<double> f;
  f.reserve(basis.size());
  for (const auto& k : basis) f.push_back(commutator_mass(s, local_projector(k, rho.dim_b())));
  return f;
}

double correlation_at_basis(const DensityMatrix& rho, const std::vector<ComplexVector>& basis) {
  double total = 0.0;
  for (double f : fisher_per_phase(rho, basis)) total += 0.5 * f;
  return total;
}

CorrelationResult q_general(const DensityMatrix& rho, const JadOptions& opts) {
  const int m = rho.dim_a(), n = rho.dim_b();
  const MatrixSet set = MatrixSet::from_blocks(extract_blocks(psd_sqrt(rho), m, n));

  CorrelationResult res;
  res.method = Method::general_jad;
  if (m == 1) {
    // A single projector, the identity: nothing to optimize.
    res.q = 0.0;
    res.optimal_basis = {ComplexVector::Ones(1)};
    JadResult trivial;
    trivial.unitary = ComplexMatrix::Identity(1, 1);
    trivial.objective = set.total_mass();
    trivial.converged = true;
    res.diagnostics = std::move(trivial);
    return res;
  }

  JadResult jr = jad(set, opts);
  res.q = clip_q(1.0 - jr.objective);
  // <k| is row k of U_o.
  res.optimal_basis = columns(jr.unitary.adjoint());
  res.diagnostics = std::move(jr);
  return res;
}

CorrelationT correlation_matrix_t(const DensityMatrix& rho) {
  if (rho.dim_a() != 2) throw DimensionError("correlation_matrix_t: subsystem A must be a qubit");
  const int n = rho.dim_b();
  const ComplexMatrix s = psd_sqrt(rho);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix ss[3];
  for (int i = 0; i < 3; ++i) ss[i] = s * kron(pauli(i + 1), id);

  CorrelationT out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const double v = (ss[i] * ss[j]).trace().real();
      out.t(i, j) = v;
      out.t(j, i) = v;
    }
  return out;
}

CorrelationResult q_qubit_qudit(const DensityMatrix& rho) {
  const CorrelationT t = correlation_matrix_t(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(t.t);
  const double top = es.eigenvalues()(2);
  int pick = 2;
  for (int k = 0; k < 3; ++k)
    if (es.eigenvalues()(k) >= top - 1e-12) {
      pick = k;
      break;
    }
  const Eigen::Vector3d dir = es.eigenvectors().col(pick).normalized();

  ComplexMatrix bloch = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 3; ++i) bloch += dir(i) * pauli(i + 1);
  const HermitianEigen be = hermitian_eig(bloch);  // eigenvalues (-1, +1)

  CorrelationResult res;
  res.method = Method::qubit_qudit;
  res.q = clip_q(0.5 * (1.0 - top));
  res.optimal_basis = {be.vectors.col(1), be.vectors.col(0)};
  return res;
}

CorrelationResult q_pure(const ComplexVector& psi, int m, int n) {
  if (psi.size() != static_cast<Eigen::Index>(m) * n)
    throw DimensionError("q_pure: vector length must be m*n");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw ValidationError("q_pure: state vector is not normalized");

  // Reduced state on A: rho_A = C C^dagger with C[a, b] = psi[a*n + b].
  ComplexMatrix c(m, n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) c(a, b) = psi(a * n + b);
  const ComplexMatrix reduced = c * c.adjoint();
  const HermitianEigen eig = hermitian_eig(reduced);

  CorrelationResult res;
  res.method = Method::pure;
  res.q = clip_q(1.0 - eig.values.squaredNorm());
  res.optimal_basis = columns(eig.vectors);
  return res;
}

CorrelationResult quantum_correlation(const DensityMatrix& rho, const JadOptions& opts) {
  if (rho.purity() > kPurityThreshold) {
    const HermitianEigen& eig = rho.spectrum();
    const ComplexVector psi = eig.vectors.col(eig.vectors.cols() - 1).normalized();
    return q_pure(psi, rho.dim_a(), rho.dim_b());
  }
  if (rho.dim_a() == 2) return q_qubit_qudit(rho);
  return q_general(rho, opts);
}

bool is_classical_quantum(const DensityMatrix& rho, double tol, const JadOptions& opts) {
  return quantum_correlation(rho, opts).q < tol;
}

}  // namespace skewcorr

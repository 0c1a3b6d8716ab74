#include "skewcorr/channels.hpp"

#include "skewcorr/random.hpp"

#include <cmath>

namespace skewcorr {

double KrausChannel::completeness_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& e : kraus) sum += e.adjoint() * e;
  return (sum - ComplexMatrix::Identity(dim, dim)).norm();
}

void KrausChannel::validate() const {
  if (dim < 1 || kraus.empty()) throw DimensionError("KrausChannel: empty channel");
  for (const auto& e : kraus)
    if (e.rows() != dim || e.cols() != dim) throw DimensionError("KrausChannel: Kraus operator size mismatch");
  if (completeness_residual() > 1e-10) throw ValidationError("KrausChannel: completeness violated");
}

KrausChannel KrausChannel::identity(int n) { return {n, {ComplexMatrix::Identity(n, n)}}; }

KrausChannel KrausChannel::unitary(const ComplexMatrix& u) {
  return {static_cast<int>(u.rows()), {u}};
}

KrausChannel KrausChannel::full_depolarizing(int n) {
  KrausChannel ch{n, {}};
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = scale;
      ch.kraus.push_back(std::move(e));
    }
  return ch;
}

KrausChannel KrausChannel::dephasing(int n) {
  KrausChannel ch{n, {}};
  for (int i = 0; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, i) = 1.0;
    ch.kraus.push_back(std::move(e));
  }
  return ch;
}

DensityMatrix apply_on_b(const DensityMatrix& rho, const KrausChannel& channel) {
  channel.validate();
  if (channel.dim != rho.dim_b()) throw DimensionError("apply_on_b: channel acts on the wrong dimension");
  const ComplexMatrix id = ComplexMatrix::Identity(rho.dim_a(), rho.dim_a());
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& e : channel.kraus) {
    const ComplexMatrix big = kron(id, e);
    out += big * rho.matrix() * big.adjoint();
  }
  return DensityMatrix::from_matrix(rho.dim_a(), rho.dim_b(), out);
}

KrausChannel random_channel(int n, int num_kraus, std::uint64_t seed) {
  if (n < 1 || num_kraus < 1) throw std::invalid_argument("random_channel: need n >= 1 and num_kraus >= 1");
  Rng rng(derive_seed(seed, 0x6b72617573ULL));
  const ComplexMatrix w = haar_unitary(n * num_kraus, rng);
  KrausChannel ch{n, {}};
  for (int i = 0; i < num_kraus; ++i) ch.kraus.push_back(w.block(i * n, 0, n, n));
  return ch;
}

DensityMatrix local_unitary(const DensityMatrix& rho, const ComplexMatrix& ua, const ComplexMatrix& ub) {
  if (ua.rows() != rho.dim_a() || ua.cols() != rho.dim_a() || ub.rows() != rho.dim_b() ||
      ub.cols() != rho.dim_b())
    throw DimensionError("local_unitary: operator sizes do not match the subsystems");
  auto check = [](const ComplexMatrix& u, const char* which) {
    if ((u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() > 1e-8)
      throw ValidationError(std::string("local_unitary: ") + which + " is not unitary");
  };
  check(ua, "U_A");
  check(ub, "U_B");
  const ComplexMatrix u = kron(ua, ub);
  return DensityMatrix::from_matrix(rho.dim_a(), rho.dim_b(), u * rho.matrix() * u.adjoint());
}

}  // namespace skewcorr

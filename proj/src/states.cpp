#include "skewcorr/states.hpp"

#include "skewcorr/random.hpp"

#include <cmath>
#include <sstream>

namespace skewcorr {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::werner, "werner"},
    {Family::isotropic, "isotropic"},
    {Family::ppt, "ppt"},
    {Family::max_entangled, "max_entangled"},
    {Family::pure_schmidt, "pure_schmidt"},
    {Family::classical_quantum, "classical_quantum"},
    {Family::random_mixed, "random_mixed"},
};

void require_range(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << what << " = " << v << " outside [" << lo << ", " << hi << "]";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& e : kFamilyNames)
    if (e.family == f) return e.name;
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (const auto& e : kFamilyNames)
    if (e.name == name) return e.family;
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

ComplexMatrix swap_operator(int m) {
  ComplexMatrix v = ComplexMatrix::Zero(m * m, m * m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) v(k * m + l, l * m + k) = 1.0;
  return v;
}

DensityMatrix werner(int m, double x) {
  if (m < 2) throw std::invalid_argument("werner: m must be >= 2");
  require_range(x, -1.0, 1.0, "werner: x");
  const double md = m;
  const double denom = md * md * md - md;
  ComplexMatrix rho = ((md - x) / denom) * ComplexMatrix::Identity(m * m, m * m) +
                      ((md * x - 1.0) / denom) * swap_operator(m);
  return DensityMatrix::from_matrix(m, m, rho);
}

ComplexVector max_entangled(int m) {
  if (m < 1) throw std::invalid_argument("max_entangled: m must be >= 1");
  ComplexVector phi = ComplexVector::Zero(m * m);
  for (int k = 0; k < m; ++k) phi(k * m + k) = 1.0 / std::sqrt(static_cast<double>(m));
  return phi;
}

DensityMatrix isotropic(int m, double x) {
  if (m < 2) throw std::invalid_argument("isotropic: m must be >= 2");
  require_range(x, 0.0, 1.0, "isotropic: x");
  const double m2 = static_cast<double>(m) * m;
  const ComplexVector phi = max_entangled(m);
  ComplexMatrix rho = ((1.0 - x) / (m2 - 1.0)) * ComplexMatrix::Identity(m * m, m * m) +
                      ((m2 * x - 1.0) / (m2 - 1.0)) * (phi * phi.adjoint());
  return DensityMatrix::from_matrix(m, m, rho);
}

DensityMatrix ppt_family(double alpha) {
  require_range(alpha, 2.0, 5.0, "ppt_family: alpha");
  const ComplexVector phi = max_entangled(3);
  ComplexMatrix plus = ComplexMatrix::Zero(9, 9);
  ComplexMatrix minus = ComplexMatrix::Zero(9, 9);
  for (int k = 0; k < 3; ++k) {
    const int k1 = (k + 1) % 3;
    plus(k * 3 + k1, k * 3 + k1) = 1.0 / 3.0;
    minus(k1 * 3 + k, k1 * 3 + k) = 1.0 / 3.0;
  }
  ComplexMatrix rho = (2.0 / 7.0) * (phi * phi.adjoint()) + (alpha / 7.0) * plus +
                      ((5.0 - alpha) / 7.0) * minus;
  return DensityMatrix::from_matrix(3, 3, rho);
}

ComplexVector pure_from_schmidt(const std::vector<double>& mu) {
  if (mu.empty()) throw std::invalid_argument("pure_from_schmidt: empty coefficient list");
  double norm2 = 0.0;
  for (double v : mu) {
    if (!(v >= 0.0)) throw std::invalid_argument("pure_from_schmidt: coefficients must be >= 0");
    norm2 += v * v;
  }
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw std::invalid_argument("pure_from_schmidt: sum of squared coefficients must be 1");
  const int r = static_cast<int>(mu.size());
  ComplexVector psi = ComplexVector::Zero(r * r);
  for (int i = 0; i < r; ++i) psi(i * r + i) = mu[i];
  return psi;
}

DensityMatrix classical_quantum(const std::vector<double>& weights,
                                const std::vector<ComplexVector>& basis,
                                const std::vector<ComplexMatrix>& b_states) {
  if (weights.empty() || weights.size() != basis.size() || weights.size() != b_states.size())
    throw std::invalid_argument("classical_quantum: weights, basis and states must have equal length");
  const auto m = static_cast<int>(basis.front().size());
  const auto n = static_cast<int>(b_states.front().rows());
  if (static_cast<int>(basis.size()) > m)
    throw std::invalid_argument("classical_quantum: more basis vectors than dim A");

  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("classical_quantum: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("classical_quantum: weights must sum to 1");

  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != m) throw std::invalid_argument("classical_quantum: basis size mismatch");
    for (std::size_t k = 0; k <= j; ++k) {
      const Complex ip = basis[k].dot(basis[j]);
      const double expect = j == k ? 1.0 : 0.0;
      if (std::abs(ip - expect) > 1e-10)
        throw std::invalid_argument("classical_quantum: basis is not orthonormal");
    }
    // Validates each B-state (throws ValidationError / DimensionError).
    DensityMatrix::from_matrix(1, n, b_states[j]);
  }

  ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    rho += weights[j] * kron(basis[j] * basis[j].adjoint(), b_states[j]);
  return DensityMatrix::from_matrix(m, n, rho);
}

DensityMatrix random_mixed(int m, int n, int rank, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("random_mixed: dimensions must be >= 1");
  if (rank < 1 || rank > m * n) throw std::invalid_argument("random_mixed: rank must be in [1, mn]");
  Rng rng(derive_seed(seed, 0x6d69786564ULL));
  const ComplexMatrix g = ginibre(m * n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(m, n, rho);
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x756e6974ULL));
  return haar_unitary(d, rng);
}

ComplexVector random_pure(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("random_pure: dimensions must be >= 1");
  Rng rng(derive_seed(seed, 0x70757265ULL));
  ComplexVector psi = ginibre(m * n, 1, rng).col(0);
  return psi / psi.norm();
}

DensityMatrix random_classical_quantum(int m, int n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x6371ULL));
  const ComplexMatrix u = haar_unitary(m, rng);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  std::vector<double> w(m);
  double total = 0.0;
  for (auto& v : w) total += (v = unif(rng));
  for (auto& v : w) v /= total;

  std::vector<ComplexVector> basis;
  std::vector<ComplexMatrix> states;
  for (int k = 0; k < m; ++k) {
    basis.emplace_back(u.col(k));
    const ComplexMatrix g = ginibre(n, n, rng);
    ComplexMatrix s = g * g.adjoint();
    states.push_back(s / s.trace().real());
  }
  return classical_quantum(w, basis, states);
}

DensityMatrix make_state(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::werner:
      return werner(spec.m, spec.param);
    case Family::isotropic:
      return isotropic(spec.m, spec.param);
    case Family::ppt:
      return ppt_family(spec.param);
    case Family::max_entangled:
      return DensityMatrix::from_pure(spec.m, spec.m, max_entangled(spec.m));
    case Family::pure_schmidt: {
      const int r = static_cast<int>(spec.extras.size());
      return DensityMatrix::from_pure(r, r, pure_from_schmidt(spec.extras));
    }
    case Family::classical_quantum:
      return random_classical_quantum(spec.m, spec.n, spec.seed);
    case Family::random_mixed:
      return random_mixed(spec.m, spec.n, spec.rank > 0 ? spec.rank : spec.m * spec.n, spec.seed);
  }
  throw std::invalid_argument("make_state: unknown family");
}

}  // namespace skewcorr

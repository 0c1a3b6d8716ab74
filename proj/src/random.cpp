#include "skewcorr/random.hpp"

#include <cmath>

namespace skewcorr {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  // Fill column-major explicitly so the draw order is fixed.
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

ComplexMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw DimensionError("haar_unitary: dimension must be >= 1");
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex phase = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

}  // namespace skewcorr

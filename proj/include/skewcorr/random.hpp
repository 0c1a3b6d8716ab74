#pragma once

#include "skewcorr/linalg.hpp"

#include <cstdint>
#include <random>

namespace skewcorr {

using Rng = std::mt19937_64;

/// Independent stream seed for (seed, stream); splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// rows x cols matrix of i.i.d. standard complex normals (E|z|^2 = 1).
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed d x d unitary: QR of a Ginibre matrix with R's diagonal
/// phases moved into Q.
ComplexMatrix haar_unitary(int d, Rng& rng);

}  // namespace skewcorr

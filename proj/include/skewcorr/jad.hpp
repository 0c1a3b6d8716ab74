#pragma once

#include "skewcorr/linalg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace skewcorr {

/// Weighted family of square matrices to be jointly diagonalized by one unitary.
struct MatrixSet {
  int dim = 0;
  std::vector<ComplexMatrix> matrices;
  std::vector<double> weights;

  /// Unit weights.
  static MatrixSet uniform(std::vector<ComplexMatrix> matrices);

  /// Blocks A_ij with i <= j only. Since A_ji = A_ij^dagger contributes the
  /// same diagonal moduli, off-diagonal blocks carry weight 2.
  static MatrixSet from_blocks(const BlockSet& blocks);

  /// Throws DimensionError / ValidationError on an inconsistent set.
  void validate() const;

  /// sum_A w_A ||A||_F^2, the upper bound of the objective.
  double total_mass() const;
};

struct JadOptions {
  double rotation_tolerance = 1e-12;
  int max_sweeps = 100;
  int restarts = 5;
  std::uint64_t seed = 20130101;

  void validate() const;
};

/// Plane rotation acting on coordinates (p, q) as
///   [ c        s ]
///   [ -conj(s) c ]
/// with real c >= 0 and c^2 + |s|^2 = 1.
struct PlaneRotation {
  double c = 1.0;
  Complex s{0.0, 0.0};

  bool is_identity() const { return s == Complex(0.0, 0.0); }
};

struct JadResult {
  ComplexMatrix unitary;                    // U_o
  std::vector<ComplexVector> joint_diagonals;  // diag(U_o A U_o^dagger) per member
  double objective = 0.0;
  int sweeps_used = 0;
  long long rotations_used = 0;  // planes visited, m(m-1)/2 per sweep
  long long matrix_updates = 0;  // rotations_used * number of members
  bool converged = false;
  int restart_index = 0;         // 0 = identity start
};

/// sum_A w_A sum_k |(U A U^dagger)_kk|^2
double objective(const ComplexMatrix& u, const MatrixSet& set);

/// Closed-form rotation in plane (p, q) maximizing the objective restricted to
/// that plane (Jacobi angles for complex, possibly non-Hermitian matrices).
PlaneRotation best_rotation(const MatrixSet& set, int p, int q);

/// A <- V A V^dagger for every member, and U <- V U.
void apply_rotation(MatrixSet& set, ComplexMatrix& u, int p, int q, const PlaneRotation& rot);

/// Called after every visited plane of a run with the running unitary.
using RotationObserver =
    std::function<void(int p, int q, const PlaneRotation&, const MatrixSet& rotated,
                       const ComplexMatrix& u)>;

/// One sweep-to-convergence run from a given starting unitary. `restart_index`
/// is recorded in the result.
JadResult jad_from(const MatrixSet& set, const ComplexMatrix& initial, const JadOptions& opts,
                   int restart_index = 0, const RotationObserver& observer = {});

/// Identity start plus `opts.restarts` seeded Haar-random starts; the run with
/// the largest objective wins (ties within 1e-14 go to the lower index).
/// Restarts run concurrently under OpenMP; results are bit-identical to
/// `jad_serial`.
JadResult jad(const MatrixSet& set, const JadOptions& opts = {});

/// Serial reference implementation of `jad`.
JadResult jad_serial(const MatrixSet& set, const JadOptions& opts = {});

/// Starting unitary of restart `index` (identity for 0).
ComplexMatrix restart_unitary(int dim, std::uint64_t seed, int index);

}  // namespace skewcorr

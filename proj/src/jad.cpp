#include "skewcorr/jad.hpp"

#include "skewcorr/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace skewcorr {

MatrixSet MatrixSet::uniform(std::vector<ComplexMatrix> matrices) {
  MatrixSet set;
  set.dim = matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  set.weights.assign(matrices.size(), 1.0);
  set.matrices = std::move(matrices);
  return set;
}

MatrixSet MatrixSet::from_blocks(const BlockSet& blocks) {
  MatrixSet set;
  set.dim = blocks.dim_a();
  const int n = blocks.dim_b();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      set.matrices.push_back(blocks(i, j));
      set.weights.push_back(i == j ? 1.0 : 2.0);
    }
  return set;
}

void MatrixSet::validate() const {
  if (matrices.empty()) throw DimensionError("MatrixSet: empty set");
  if (weights.size() != matrices.size())
    throw DimensionError("MatrixSet: one weight per matrix required");
  for (const auto& a : matrices)
    if (a.rows() != dim || a.cols() != dim)
      throw DimensionError("MatrixSet: matrices must be square of identical dimension");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("MatrixSet: weights must be positive");
}

double MatrixSet::total_mass() const {
  double total = 0.0;
  for (std::size_t k = 0; k < matrices.size(); ++k) total += weights[k] * matrices[k].squaredNorm();
  return total;
}

void JadOptions::validate() const {
  if (!(rotation_tolerance > 0.0)) throw ValidationError("JadOptions: rotation_tolerance must be > 0");
  if (max_sweeps < 1) throw ValidationError("JadOptions: max_sweeps must be >= 1");
  if (restarts < 0) throw ValidationError("JadOptions: restarts must be >= 0");
}

double objective(const ComplexMatrix& u, const MatrixSet& set) {
  if (u.rows() != set.dim || u.cols() != set.dim) throw DimensionError("objective: unitary size mismatch");
  double total = 0.0;
  for (std::size_t a = 0; a < set.matrices.size(); ++a) {
    if (set.matrices[a].rows() != set.dim || set.matrices[a].cols() != set.dim)
      throw DimensionError("objective: member size mismatch");
    const ComplexMatrix t = u * set.matrices[a] * u.adjoint();
    total += set.weights[a] * t.diagonal().squaredNorm();
  }
  return total;
}

PlaneRotation best_rotation(const MatrixSet& set, int p, int q) {
  if (p == q) throw DimensionError("best_rotation: p and q must differ");
  if (p < 0 || q < 0 || p >= set.dim || q >= set.dim || p > q)
    throw DimensionError("best_rotation: need 0 <= p < q < dim");

  // G = sum_A w_A Re(conj(h) h^T), h = [A_pp - A_qq, A_pq + A_qp, i(A_qp - A_pq)].
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  double plane_mass = 0.0;
  for (std::size_t k = 0; k < set.matrices.size(); ++k) {
    const ComplexMatrix& a = set.matrices[k];
    const double w = set.weights[k];
    const Complex app = a(p, p), aqq = a(q, q), apq = a(p, q), aqp = a(q, p);
    const Complex h[3] = {app - aqq, apq + aqp, Complex(0.0, 1.0) * (aqp - apq)};
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c) g(r, c) += w * (std::conj(h[r]) * h[c]).real();
    plane_mass += w * (std::norm(app) + std::norm(aqq) + std::norm(apq) + std::norm(aqp));
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < r; ++c) g(r, c) = g(c, r);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(g);
  const Eigen::Vector3d& lam = es.eigenvalues();  // ascending
  const double top = lam(2);
  const double band = 1e-12 * std::max(top, 0.0) + 1e-26 * plane_mass;
  if (!(top > band)) return {};

  // Dominant eigenvector; when the top eigenvalue is (numerically) degenerate
  // take the member of the top eigenspace closest to the current orientation.
  Eigen::Vector3d dir = Eigen::Vector3d::Zero();
  const Eigen::Vector3d e0 = Eigen::Vector3d::UnitX();
  int top_count = 0;
  for (int k = 2; k >= 0; --k)
    if (lam(k) >= top - band) {
      const Eigen::Vector3d v = es.eigenvectors().col(k);
      dir += v.dot(e0) * v;
      ++top_count;
    }
  if (top_count == 1 || dir.norm() < 1e-8) dir = es.eigenvectors().col(2);
  dir.normalize();
  if (dir(0) < 0.0) dir = -dir;

  PlaneRotation rot;
  rot.c = std::sqrt(0.5 * (1.0 + dir(0)));
  rot.s = Complex(dir(1), dir(2)) / (2.0 * rot.c);
  if (std::abs(rot.s) == 0.0) return {};
  return rot;
}

void apply_rotation(MatrixSet& set, ComplexMatrix& u, int p, int q, const PlaneRotation& rot) {
  const double c = rot.c;
  const Complex s = rot.s;
  const Complex sc = std::conj(s);
  auto rotate_rows = [&](ComplexMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Complex xp = a(p, j), xq = a(q, j);
      a(p, j) = c * xp + s * xq;
      a(q, j) = -sc * xp + c * xq;
    }
  };
  for (auto& a : set.matrices) {
    rotate_rows(a);
    // A <- A V^dagger
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex xp = a(i, p), xq = a(i, q);
      a(i, p) = c * xp + sc * xq;
      a(i, q) = -s * xp + c * xq;
    }
  }
  rotate_rows(u);
}

ComplexMatrix restart_unitary(int dim, std::uint64_t seed, int index) {
  if (index == 0) return ComplexMatrix::Identity(dim, dim);
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  return haar_unitary(dim, rng);
}

JadResult jad_from(const MatrixSet& set, const ComplexMatrix& initial, const JadOptions& opts,
                   int restart_index, const RotationObserver& observer) {
  set.validate();
  opts.validate();
  if (initial.rows() != set.dim || initial.cols() != set.dim)
    throw DimensionError("jad: initial unitary size mismatch");

  MatrixSet work = set;
  for (auto& a : work.matrices) a = initial * a * initial.adjoint();
  ComplexMatrix u = initial;

  JadResult res;
  res.restart_index = restart_index;
  const int m = set.dim;
  const auto members = static_cast<long long>(set.matrices.size());
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    double largest = 0.0;
    for (int p = 0; p < m - 1; ++p)
      for (int q = p + 1; q < m; ++q) {
        const PlaneRotation rot = best_rotation(work, p, q);
        largest = std::max(largest, std::abs(rot.s));
        if (!rot.is_identity()) apply_rotation(work, u, p, q, rot);
        ++res.rotations_used;
        res.matrix_updates += members;
        if (observer) observer(p, q, rot, work, u);
      }
    ++res.sweeps_used;
    if (largest < opts.rotation_tolerance) {
      res.converged = true;
      break;
    }
  }

  res.unitary = std::move(u);
  res.objective = 0.0;
  res.joint_diagonals.reserve(set.matrices.size());
  for (std::size_t a = 0; a < set.matrices.size(); ++a) {
    ComplexVector d = (res.unitary * set.matrices[a] * res.unitary.adjoint()).diagonal();
    res.objective += set.weights[a] * d.squaredNorm();
    res.joint_diagonals.push_back(std::move(d));
  }
  return res;
}

namespace {

JadResult pick_best(std::vector<JadResult>& runs) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].objective > runs[best].objective + 1e-14) best = r;
  return std::move(runs[best]);
}

}  // namespace

JadResult jad(const MatrixSet& set, const JadOptions& opts) {
  set.validate();
  opts.validate();
  const int runs = opts.restarts + 1;
  std::vector<JadResult> results(static_cast<std::size_t>(runs));
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < runs; ++r)
    results[r] = jad_from(set, restart_unitary(set.dim, opts.seed, r), opts, r);
  return pick_best(results);
}

JadResult jad_serial(const MatrixSet& set, const JadOptions& opts) {
  set.validate();
  opts.validate();
  const int runs = opts.restarts + 1;
  std::vector<JadResult> results;
  results.reserve(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r)
    results.push_back(jad_from(set, restart_unitary(set.dim, opts.seed, r), opts, r));
  return pick_best(results);
}

}  // namespace skewcorr

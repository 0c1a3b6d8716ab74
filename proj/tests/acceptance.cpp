// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "skewcorr/channels.hpp"
#include "skewcorr/jad.hpp"
#include "skewcorr/measure.hpp"
#include "skewcorr/oracle.hpp"
#include "skewcorr/states.hpp"
#include "skewcorr/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace skewcorr;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Worst residual of sum_k F_Qk - 2q over every state evaluated in criteria 1-5.
struct FisherLedger {
  double worst = 0.0;
  int states = 0;

  void add(const DensityMatrix& rho, const CorrelationResult& r) {
    double sum = 0.0;
    for (double f : fisher_per_phase(rho, r.optimal_basis)) sum += f;
    worst = std::max(worst, std::abs(sum - 2.0 * r.q));
    ++states;
  }
};

FisherLedger g_fisher;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// 1 - Tr rho_A^2 from the coefficient matrix of psi.
double pure_reference(const ComplexVector& psi, int m, int n) {
  Eigen::MatrixXcd c(m, n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) c(a, b) = psi(a * n + b);
  return 1.0 - (c * c.adjoint()).squaredNorm();
}

Verdict family_reproduction(const std::string& family, double from, double to,
                            const std::function<double(int)>& zero_point) {
  double worst_gap = 0.0, worst_zero = 0.0, worst_top = 0.0;
  for (int m = 2; m <= 10; ++m) {
    for (double x : sweep_grid(from, to, 101)) {
      const DensityMatrix rho = family == "werner" ? werner(m, x) : isotropic(m, x);
      const CorrelationResult r = q_general(rho);
      g_fisher.add(rho, r);
      worst_gap = std::max(worst_gap, std::abs(r.q - *analytic_value(family, m, x)));
    }
    const double x0 = zero_point(m);
    const DensityMatrix zero_state = family == "werner" ? werner(m, x0) : isotropic(m, x0);
    const CorrelationResult z = q_general(zero_state);
    g_fisher.add(zero_state, z);
    worst_zero = std::max(worst_zero, std::abs(z.q));
    if (family == "isotropic") {
      const CorrelationResult top = q_general(isotropic(m, 1.0));
      worst_top = std::max(worst_top, std::abs(top.q - (m - 1.0) / m));
    }
  }
  Verdict v;
  v.ok = worst_gap < 1e-6 && worst_zero < 1e-9 && worst_top < 1e-9;
  v.detail = "max_gap=" + sci(worst_gap) + " max|q(zero)|=" + sci(worst_zero);
  if (family == "isotropic") v.detail += " max|q(m,1)-(m-1)/m|=" + sci(worst_top);
  return v;
}

Verdict criterion1() {
  return family_reproduction("werner", -1.0, 1.0, [](int m) { return 1.0 / m; });
}

Verdict criterion2() {
  return family_reproduction("isotropic", 0.0, 1.0, [](int m) { return 1.0 / (m * m); });
}

Verdict criterion3() {
  const SweepConfig config{"ppt", 3, 2.0, 5.0, 301, {}};
  const auto rows = run_sweep_serial(config);
  double worst_gap = 0.0, worst_plateau = 0.0;
  for (const auto& row : rows) {
    worst_gap = std::max(worst_gap, *row.abs_gap);
    if (row.param >= 3.2) worst_plateau = std::max(worst_plateau, std::abs(row.q_computed - 4.0 / 21.0));
    const DensityMatrix rho = ppt_family(row.param);
    g_fisher.add(rho, q_general(rho));
  }
  const double kink = locate_ppt_kink(rows, config.jad);
  Verdict v;
  v.ok = worst_gap < 1e-6 && std::abs(kink - 3.066885) < 1e-3 && worst_plateau < 1e-8;
  std::ostringstream os;
  os.precision(7);
  os << "max_gap=" << sci(worst_gap) << " kink=" << kink << " max|plateau-4/21|=" << sci(worst_plateau);
  v.detail = os.str();
  return v;
}

Verdict criterion4() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int m = 2 + i % 3, n = 2 + (i / 3) % 3;
    const ComplexVector psi = random_pure(m, n, 4000 + i);
    const DensityMatrix rho = DensityMatrix::from_pure(m, n, psi);
    const CorrelationResult r = q_general(rho);
    g_fisher.add(rho, r);
    worst = std::max(worst, std::abs(r.q - pure_reference(psi, m, n)));
  }
  return {worst < 1e-8, "100 states up to 4x4, max|jad-(1-Tr rhoA^2)|=" + sci(worst)};
}

Verdict criterion5() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const DensityMatrix rho = random_mixed(2, n, 1 + (i / 2) % (2 * n), 5000 + i);
    const CorrelationResult closed = q_qubit_qudit(rho);
    const CorrelationResult general = q_general(rho);
    g_fisher.add(rho, closed);
    g_fisher.add(rho, general);
    worst = std::max(worst, std::abs(closed.q - general.q));
  }
  return {worst < 1e-8, "100 states 2x2/2x3, max|qubit-jad|=" + sci(worst)};
}

Verdict criterion6() {
  double worst_cq = 0.0, least_entangled = 1.0;
  for (int i = 0; i < 50; ++i) {
    const int m = 2 + i % 3, n = 2 + (i / 3) % 2;
    DensityMatrix rho = random_classical_quantum(m, n, 6000 + i);  // Haar-rotated basis on A
    if (i % 5 == 0) {
      // Computational basis, random B states.
      std::vector<double> w(m, 1.0 / m);
      std::vector<ComplexVector> basis;
      std::vector<ComplexMatrix> bs;
      for (int k = 0; k < m; ++k) {
        basis.push_back(ComplexVector::Unit(m, k));
        bs.push_back(random_mixed(1, n, n, 6100 + 10 * i + k).matrix());
      }
      rho = classical_quantum(w, basis, bs);
    }
    worst_cq = std::max({worst_cq, q_general(rho).q, quantum_correlation(rho).q});
  }
  for (int i = 0; i < 50; ++i) {
    const int m = 2 + i % 3, n = 2 + (i / 3) % 3;
    const ComplexVector psi = random_pure(m, n, 6500 + i);
    const DensityMatrix rho = DensityMatrix::from_pure(m, n, psi);
    least_entangled = std::min({least_entangled, q_general(rho).q, quantum_correlation(rho).q});
  }
  return {worst_cq < 1e-9 && least_entangled > 1e-4,
          "max q(CQ)=" + sci(worst_cq) + " min q(entangled pure)=" + sci(least_entangled)};
}

Verdict criterion7() {
  const int dims[3][2] = {{2, 2}, {2, 3}, {3, 3}};
  double worst_lu = 0.0, worst_cptp = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int m = dims[i % 3][0], n = dims[i % 3][1];
    const DensityMatrix rho = random_mixed(m, n, 1 + i % (m * n), 7000 + i);
    const double q = q_general(rho).q;
    const DensityMatrix moved = local_unitary(rho, random_unitary(m, 7100 + i), random_unitary(n, 7200 + i));
    worst_lu = std::max(worst_lu, std::abs(q_general(moved).q - q));
  }
  for (int i = 0; i < 50; ++i) {
    const int m = dims[i % 3][0], n = dims[i % 3][1];
    const DensityMatrix rho = random_mixed(m, n, 1 + i % (m * n), 7300 + i);
    const DensityMatrix out = apply_on_b(rho, random_channel(n, 1 + i % 4, 7400 + i));
    worst_cptp = std::max(worst_cptp, q_general(out).q - q_general(rho).q);
  }
  return {worst_lu < 1e-8 && worst_cptp <= 1e-8,
          "max|dq| under U_A(x)U_B=" + sci(worst_lu) + " max(q'-q) under channels on B=" + sci(worst_cptp)};
}

Verdict criterion8() {
  const int dims[5][2] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  double worst_low = 0.0, worst_high = 0.0;
  for (int i = 0; i < 30; ++i) {
    const int m = dims[i % 5][0], n = dims[i % 5][1];
    const DensityMatrix rho = random_mixed(m, n, 1 + (i / 5) % (m * n), 8000 + i);
    const double q = q_general(rho).q;
    const double bf = brute_force_q(rho);
    worst_low = std::max(worst_low, q - bf);
    worst_high = std::max(worst_high, bf - q);
  }
  return {worst_low <= 1e-6 && worst_high <= 1e-4,
          "30 states mn<=9, max(q-bf)=" + sci(worst_low) + " max(bf-q)=" + sci(worst_high)};
}

Verdict criterion9() {
  return {g_fisher.worst < 1e-9,
          std::to_string(g_fisher.states) + " evaluations, max|sum F_Qk-2q|=" + sci(g_fisher.worst)};
}

MatrixSet random_set(int dim, int count, std::uint64_t seed) {
  std::vector<ComplexMatrix> mats;
  for (int a = 0; a < count; ++a)
    mats.push_back(random_unitary(dim, seed + a) * random_mixed(1, dim, dim, seed + 50 + a).matrix());
  return MatrixSet::uniform(std::move(mats));
}

Verdict criterion10() {
  double worst_drop = 0.0, worst_frob = 0.0, worst_offdiag = 0.0;
  bool deterministic = true;

  std::vector<MatrixSet> sets;
  for (int s = 1; s <= 6; ++s) {
    const int m = 3 + s % 2;
    sets.push_back(MatrixSet::from_blocks(extract_blocks(psd_sqrt(random_mixed(m, 3, 5, 9000 + s)), m, 3)));
  }
  for (std::uint64_t s = 1; s <= 6; ++s) sets.push_back(random_set(2 + static_cast<int>(s), 4, 9100 + 10 * s));

  for (std::size_t k = 0; k < sets.size(); ++k) {
    const MatrixSet& set = sets[k];
    double last = objective(ComplexMatrix::Identity(set.dim, set.dim), set);
    auto observer = [&](int, int, const PlaneRotation&, const MatrixSet& rotated, const ComplexMatrix&) {
      const double obj = objective(ComplexMatrix::Identity(set.dim, set.dim), rotated);
      worst_drop = std::max(worst_drop, last - obj);
      last = obj;
      for (std::size_t a = 0; a < set.matrices.size(); ++a)
        worst_frob = std::max(worst_frob, std::abs(rotated.matrices[a].norm() - set.matrices[a].norm()));
    };
    jad_from(set, ComplexMatrix::Identity(set.dim, set.dim), JadOptions{}, 0, observer);

    const JadResult a = jad(set), b = jad(set), c = jad_serial(set);
    omp_set_num_threads(4);
    const JadResult d = jad(set);
    omp_set_num_threads(1);
    deterministic = deterministic && a.unitary == b.unitary && a.unitary == c.unitary && a.unitary == d.unitary &&
                    a.objective == c.objective && a.objective == d.objective && a.sweeps_used == c.sweeps_used;
  }

  for (int dim : {2, 3, 5, 8}) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const ComplexMatrix u = random_unitary(dim, 9500 + 10 * dim + s);
      std::vector<ComplexMatrix> mats;
      for (int a = 0; a < 3; ++a) {
        const RealVector d = random_mixed(1, dim, dim, 9600 + 10 * dim + 3 * s + a).spectrum().values;
        mats.push_back(u * d.cast<Complex>().asDiagonal() * u.adjoint());
      }
      const MatrixSet set = MatrixSet::uniform(mats);
      const JadResult r = jad(set);
      double off = 0.0;
      for (const auto& mat : mats) {
        const ComplexMatrix rot = r.unitary * mat * r.unitary.adjoint();
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            if (i != j) off += std::norm(rot(i, j));
      }
      worst_offdiag = std::max(worst_offdiag, off / set.total_mass());
    }
  }

  return {worst_drop <= 1e-13 && worst_frob <= 1e-10 && worst_offdiag < 1e-18 && deterministic,
          "max objective drop=" + sci(worst_drop) + " max Frobenius drift=" + sci(worst_frob) +
              " commuting off-diag fraction=" + sci(worst_offdiag) +
              " bit-deterministic=" + (deterministic ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"werner reproduction", criterion1},
      {"isotropic reproduction", criterion2},
      {"ppt reproduction", criterion3},
      {"pure-state reduction", criterion4},
      {"qubit-qudit cross-path", criterion5},
      {"zero characterization", criterion6},
      {"property suites", criterion7},
      {"oracle sandwich", criterion8},
      {"metrology identity", criterion9},
      {"jad unit suite", criterion10},
  };

  omp_set_num_threads(1);
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !v.ok;
    std::printf("criterion %2zu %s  %-24s %s (%.1fs)\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

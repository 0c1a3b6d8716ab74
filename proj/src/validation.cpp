#include "skewcorr/validation.hpp"

#include "skewcorr/channels.hpp"
#include "skewcorr/measure.hpp"
#include "skewcorr/oracle.hpp"
#include "skewcorr/random.hpp"
#include "skewcorr/states.hpp"

#include <algorithm>
#include <cmath>

namespace skewcorr {

namespace {

struct Dims {
  int m, n;
};

constexpr Dims kPropertyDims[] = {{2, 2}, {2, 3}, {3, 3}};

class Tally {
 public:
  Tally(std::string suite, std::string check, double tolerance) {
    rep_.suite = std::move(suite);
    rep_.check = std::move(check);
    rep_.tolerance = tolerance;
  }
  // `residual` is a violation: the case passes when it is <= tolerance.
  void add(double residual) {
    ++rep_.total;
    if (residual <= rep_.tolerance) ++rep_.passed;
    rep_.worst = std::max(rep_.worst, residual);
  }
  SuiteReport report() const { return rep_; }

 private:
  SuiteReport rep_;
};

DensityMatrix case_state(const ValidationConfig& c, int k, Dims d) {
  const std::uint64_t s = derive_seed(c.seed, static_cast<std::uint64_t>(k));
  const int rank = 1 + static_cast<int>(s % static_cast<std::uint64_t>(d.m * d.n));
  return random_mixed(d.m, d.n, std::max(rank, 2), s);
}

}  // namespace

std::vector<SuiteReport> run_property_suite(const ValidationConfig& config) {
  Tally invariance("properties", "local_unitary_invariance", 1e-8);
  Tally contraction("properties", "cptp_contractivity_on_B", 1e-8);
  Tally pure("properties", "pure_state_reduction", 1e-8);
  Tally paths("properties", "qubit_qudit_path_consistency", 1e-8);
  Tally certificate("properties", "basis_certificate", 1e-9);
  Tally metrology("properties", "fisher_sum_equals_2q", 1e-9);

  auto check_state = [&](const DensityMatrix& rho, int k) {
    const std::uint64_t s = derive_seed(config.seed, 1000 + static_cast<std::uint64_t>(k));
    const CorrelationResult base = q_general(rho, config.jad);

    const DensityMatrix rotated =
        local_unitary(rho, random_unitary(rho.dim_a(), s), random_unitary(rho.dim_b(), s + 1));
    invariance.add(std::abs(q_general(rotated, config.jad).q - base.q));

    const int kraus = 1 + static_cast<int>(s % 4);
    const DensityMatrix out = apply_on_b(rho, random_channel(rho.dim_b(), kraus, s + 2));
    contraction.add(std::max(0.0, q_general(out, config.jad).q - base.q));

    certificate.add(std::abs(correlation_at_basis(rho, base.optimal_basis) - base.q));
    double fisher = 0.0;
    for (double f : fisher_per_phase(rho, base.optimal_basis)) fisher += f;
    metrology.add(std::abs(fisher - 2.0 * base.q));

    if (rho.dim_a() == 2) paths.add(std::abs(q_qubit_qudit(rho).q - base.q));
  };

  for (int k = 0; k < config.cases; ++k) {
    const Dims d = kPropertyDims[k % 3];
    check_state(case_state(config, k, d), k);

    const ComplexVector psi = random_pure(d.m, d.n, derive_seed(config.seed, 5000 + k));
    const DensityMatrix rho = DensityMatrix::from_pure(d.m, d.n, psi);
    pure.add(std::abs(q_general(rho, config.jad).q - q_pure(psi, d.m, d.n).q));
  }
  if (config.extra_state) check_state(*config.extra_state, config.cases);

  return {invariance.report(), contraction.report(), pure.report(),
          paths.report(),      certificate.report(), metrology.report()};
}

std::vector<SuiteReport> run_oracle_suite(const ValidationConfig& config) {
  // Residuals are q_general - brute_force (lower) and brute_force - q_general (upper).
  Tally lower("oracle", "sandwich_lower", 1e-6);
  Tally upper("oracle", "sandwich_upper", 1e-4);
  Tally closed("oracle", "closed_form_families", 1e-6);

  constexpr Dims kSmall[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  OracleBudget budget;
  budget.seed = config.seed;
  budget.restarts = 16;
  const int cases = std::min(config.cases, 30);
  for (int k = 0; k < cases; ++k) {
    const Dims d = kSmall[k % 5];
    const DensityMatrix rho = case_state(config, 10000 + k, d);
    const double q = q_general(rho, config.jad).q;
    const double bf = brute_force_q(rho, budget);
    lower.add(std::max(0.0, q - bf));
    upper.add(std::max(0.0, bf - q));
  }

  for (int m = 2; m <= 4; ++m)
    for (double x : {-1.0, -0.3, 0.2, 0.9}) closed.add(std::abs(q_general(werner(m, x), config.jad).q - analytic_werner(m, x)));
  for (int m = 2; m <= 4; ++m)
    for (double x : {0.0, 0.3, 0.7, 1.0})
      closed.add(std::abs(q_general(isotropic(m, x), config.jad).q - analytic_isotropic(m, x)));
  for (double a : {2.0, 2.8, 3.5, 4.5})
    closed.add(std::abs(q_general(ppt_family(a), config.jad).q - analytic_ppt(a)));

  return {lower.report(), upper.report(), closed.report()};
}

}  // namespace skewcorr

#include <doctest.h>

#include "skewcorr/linalg.hpp"
#include "skewcorr/states.hpp"

#include <cmath>

using namespace skewcorr;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ComplexMatrix bell_projector() {
  const ComplexVector phi = max_entangled(2);
  return phi * phi.adjoint();
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("hermitian_eig on small fixed matrices") {
  SUBCASE("identity") {
    const auto e = hermitian_eig(ComplexMatrix::Identity(2, 2));
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(1.0));
    CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
  }
  SUBCASE("pauli x") {
    ComplexMatrix x = ComplexMatrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    const auto e = hermitian_eig(x);
    CHECK(e.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.values(1) == doctest::Approx(1.0).epsilon(1e-14));
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK((back - x).norm() < 1e-10);
  }
  SUBCASE("already diagonal") {
    const auto e = hermitian_eig(diag2(0.2, 0.8));
    CHECK(e.values(0) == doctest::Approx(0.2));
    CHECK(e.values(1) == doctest::Approx(0.8));
    // V = I up to column phases.
    CHECK(std::abs(std::abs(e.vectors(0, 0)) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(e.vectors(1, 1)) - 1.0) < 1e-12);
  }
}

TEST_CASE("hermitian_eig errors") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), DimensionError);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(hermitian_eig(bad), ValidationError);
}

TEST_CASE("hermitian_eig reconstructs random density matrices") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DensityMatrix rho = random_mixed(2, 3, 1 + static_cast<int>(seed % 6), seed);
    const auto e = hermitian_eig(rho.matrix());
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK((back - rho.matrix()).norm() <= 1e-10 * rho.matrix().norm());
    CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(6, 6)).norm() < 1e-12);
    CHECK(std::abs(e.values.sum() - 1.0) < 1e-10);
  }
}

TEST_CASE("DensityMatrix validation") {
  SUBCASE("symmetrizes tiny anti-Hermitian noise") {
    ComplexMatrix m = diag2(0.5, 0.5);
    m(0, 1) = Complex(1e-12, 0.0);
    const auto rho = DensityMatrix::from_matrix(1, 2, m);
    CHECK(hermiticity_defect(rho.matrix()) == 0.0);
  }
  SUBCASE("rejects non-Hermitian") {
    ComplexMatrix m = diag2(0.5, 0.5);
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(1, 2, m), ValidationError);
  }
  SUBCASE("clamps tiny negative eigenvalues, rejects larger ones") {
    CHECK_NOTHROW(DensityMatrix::from_matrix(1, 2, diag2(1.0 + 5e-13, -5e-13)));
    CHECK_THROWS_AS(DensityMatrix::from_matrix(1, 2, diag2(1.0 + 1e-9, -1e-9)), ValidationError);
  }
  SUBCASE("trace") {
    CHECK_THROWS_AS(DensityMatrix::from_matrix(1, 2, diag2(0.5, 0.6)), ValidationError);
    const auto rho = DensityMatrix::from_matrix(1, 2, diag2(0.5, 0.5 + 1e-9));
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-15);
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(DensityMatrix::from_matrix(2, 2, diag2(0.5, 0.5)), DimensionError);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(0, 2, diag2(0.5, 0.5)), DimensionError);
  }
}

TEST_CASE("psd_sqrt") {
  SUBCASE("maximally mixed") {
    const int m = 2, n = 3;
    const auto rho = DensityMatrix::from_matrix(m, n, ComplexMatrix::Identity(6, 6) / 6.0);
    const ComplexMatrix expect = ComplexMatrix::Identity(6, 6) / std::sqrt(6.0);
    CHECK((psd_sqrt(rho) - expect).norm() < 1e-14);
  }
  SUBCASE("pure projector is its own root") {
    const auto rho = DensityMatrix::from_matrix(2, 2, bell_projector());
    CHECK((psd_sqrt(rho) - bell_projector()).norm() < 1e-12);
  }
  SUBCASE("diagonal") {
    const auto rho = DensityMatrix::from_matrix(1, 2, diag2(0.64, 0.36));
    CHECK((psd_sqrt(rho) - diag2(0.8, 0.6)).norm() < 1e-14);
  }
  SUBCASE("matrix overload rejects indefinite input") {
    CHECK_THROWS_AS(psd_sqrt(diag2(1.0, -0.5)), ValidationError);
  }
  SUBCASE("round trip on random states of every rank") {
    for (int rank = 1; rank <= 9; ++rank) {
      const auto rho = random_mixed(3, 3, rank, 100 + rank);
      const ComplexMatrix s = psd_sqrt(rho);
      CHECK((s * s - rho.matrix()).norm() < 1e-9);
      CHECK(hermiticity_defect(s) < 1e-14);
      CHECK(hermitian_eig(s).values(0) > -1e-12);
    }
  }
}

TEST_CASE("kron") {
  CHECK((kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(6, 6))
            .norm() == 0.0);

  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = 1.0;
  CHECK((kron(diag2(1.0, 0.0), ComplexMatrix::Identity(2, 2)) - expect).norm() == 0.0);

  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  CHECK((kron(nil, ComplexMatrix::Identity(1, 1)) - nil).norm() == 0.0);

  // Index convention (i*rB + k, j*cB + l).
  const ComplexMatrix a = ComplexMatrix::Random(2, 3);
  const ComplexMatrix b = ComplexMatrix::Random(3, 2);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  CHECK(std::abs(k(1 * 3 + 2, 2 * 2 + 1) - a(1, 2) * b(2, 1)) < 1e-15);
}

TEST_CASE("partial traces") {
  const auto bell = DensityMatrix::from_matrix(2, 2, bell_projector());
  CHECK((partial_trace_b(bell) - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-14);
  CHECK((partial_trace_a(bell) - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-14);

  const ComplexMatrix sigma = random_mixed(1, 3, 3, 4).matrix();
  const auto prod = DensityMatrix::from_matrix(2, 3, kron(diag2(1.0, 0.0), sigma));
  CHECK((partial_trace_b(prod) - diag2(1.0, 0.0)).norm() < 1e-12);
  CHECK((partial_trace_a(prod) - sigma).norm() < 1e-12);

  const auto mixed = DensityMatrix::from_matrix(3, 3, ComplexMatrix::Identity(9, 9) / 9.0);
  CHECK((partial_trace_b(mixed) - ComplexMatrix::Identity(3, 3) / 3.0).norm() < 1e-14);

  // Product states of random marginals.
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const ComplexMatrix ra = random_mixed(1, 3, 2, s).matrix();
    const ComplexMatrix rb = random_mixed(1, 2, 2, s + 50).matrix();
    const auto rho = DensityMatrix::from_matrix(3, 2, kron(ra, rb));
    CHECK((partial_trace_b(rho) - ra).norm() < 1e-12);
    CHECK(std::abs(partial_trace_b(rho).trace().real() - 1.0) < 1e-10);
  }
}

TEST_CASE("extract_blocks") {
  SUBCASE("scalar root") {
    const int m = 2, n = 3;
    const ComplexMatrix s = ComplexMatrix::Identity(6, 6) / std::sqrt(6.0);
    const BlockSet b = extract_blocks(s, m, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const ComplexMatrix expect =
            i == j ? ComplexMatrix(ComplexMatrix::Identity(m, m) / std::sqrt(6.0)) : ComplexMatrix::Zero(m, m);
        CHECK((b(i, j) - expect).norm() < 1e-15);
      }
  }
  SUBCASE("bell state, direct index evaluation") {
    // A_ij[a, b] = <a,i|Phi><Phi|b,j> = 1/2 delta_ai delta_bj
    const BlockSet b = extract_blocks(bell_projector(), 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int c = 0; c < 2; ++c) {
            const double expect = (a == i && c == j) ? 0.5 : 0.0;
            CHECK(std::abs(b(i, j)(a, c) - expect) < 1e-15);
          }
  }
  SUBCASE("adjoint pairing and Frobenius partition") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto rho = random_mixed(3, 4, 5, seed);
      const ComplexMatrix s = psd_sqrt(rho);
      const BlockSet b = extract_blocks(s, 3, 4);
      double mass = 0.0;
      Complex diag_trace = 0.0;
      for (int i = 0; i < 4; ++i) {
        diag_trace += b(i, i).trace();
        for (int j = 0; j < 4; ++j) {
          mass += b(i, j).squaredNorm();
          CHECK((b(i, j).adjoint() - b(j, i)).norm() < 1e-15);
        }
      }
      CHECK(std::abs(mass - 1.0) < 1e-10);
      CHECK(std::abs(diag_trace - s.trace()) < 1e-12);
    }
  }
  SUBCASE("dimension mismatch") { CHECK_THROWS_AS(extract_blocks(ComplexMatrix::Identity(6, 6), 2, 2), DimensionError); }
}

}  // TEST_SUITE

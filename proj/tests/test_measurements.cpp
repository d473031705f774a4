// Copyright 2026 The entrosep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "entrosep/measurements.hpp"
#include "entrosep/states.hpp"
#include "oracles.hpp"

using namespace entrosep;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("probabilities of basic measurements") {
  const DensityMatrix mixed = DensityMatrix::make(0.5 * Matrix::Identity(2, 2));
  const ProbabilityVector p = probabilities(computational_basis(2), mixed);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = random_density(3, rng);
    const ProbabilityVector q = probabilities(sic_povm(3), rho);
    double sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) sum += q[i];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  const DensityMatrix qutrit = random_density(3, rng);
  CHECK_THROWS_AS((void)probabilities(computational_basis(2), qutrit), UsageError);
}

TEST_CASE("rotated qubit basis") {
  const RankOnePovm x_eigen = rotated_qubit_basis(kPi / 4.0);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(x_eigen.vector(0)(0) - Complex(r)) < 1e-15);
  CHECK(std::abs(x_eigen.vector(0)(1) - Complex(r)) < 1e-15);

  const double theta = kPi / 6.0;
  const Matrix v = overlap_matrix(computational_basis(2), rotated_qubit_basis(theta));
  CHECK(std::abs(v(0, 0) - Complex(std::cos(theta))) < 1e-15);
  CHECK(std::abs(v(0, 1) - Complex(std::sin(theta))) < 1e-15);
  CHECK(std::abs(v(1, 0) - Complex(std::sin(theta))) < 1e-15);
  CHECK(std::abs(v(1, 1) - Complex(-std::cos(theta))) < 1e-15);

  CHECK_THROWS_AS((void)rotated_qubit_basis(0.0), UsageError);
  CHECK_THROWS_AS((void)rotated_qubit_basis(kPi / 2.0), UsageError);
}

TEST_CASE("qubit Pauli MUBs are pairwise unbiased") {
  const std::vector<RankOnePovm> mubs = qubit_pauli_mubs();
  REQUIRE(mubs.size() == 3);
  for (const Vector& zi : mubs[0].vectors()) {
    for (const Vector& xj : mubs[1].vectors()) {
      CHECK(std::abs(zi.dot(xj)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
  }
  CHECK_FALSE(validate_mub_pair(mubs[0], mubs[0]).pass);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(validate_mub_pair(mubs[i], mubs[j]).pass);
    }
  }
}

TEST_CASE("prime-dimension MUB constructions") {
  SUBCASE("d = 3 gives four pairwise unbiased bases") {
    const std::vector<RankOnePovm> mubs = prime_pauli_mubs(3);
    REQUIRE(mubs.size() == 4);
    for (std::size_t i = 0; i < mubs.size(); ++i) {
      CHECK(mubs[i].is_orthonormal_basis());
      for (std::size_t j = i + 1; j < mubs.size(); ++j) {
        const ValidationReport pair = validate_mub_pair(mubs[i], mubs[j]);
        CHECK(pair.pass);
      }
    }
  }
  SUBCASE("d = 3 third basis is the stated eigenbasis") {
    const std::vector<RankOnePovm> mubs = prime_pauli_mubs(3);
    const Matrix xz = gen_pauli_x(3) * gen_pauli_z(3);
    for (std::size_t k = 0; k < 3; ++k) {
      const Vector v = mubs[2].vector(k);
      const Complex omega_k = std::exp(Complex(0.0, 2.0 * kPi * k / 3.0));
      CHECK((xz * v - omega_k * v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("d = 2 matches the Pauli eigenbases' unbiasedness profile") {
    const std::vector<RankOnePovm> mubs = prime_pauli_mubs(2);
    REQUIRE(mubs.size() == 3);
    for (std::size_t i = 0; i < mubs.size(); ++i) {
      for (std::size_t j = i + 1; j < mubs.size(); ++j) {
        CHECK(validate_mub_pair(mubs[i], mubs[j]).pass);
      }
    }
  }
  SUBCASE("d = 5 yields six bases") {
    const std::vector<RankOnePovm> mubs = prime_pauli_mubs(5);
    REQUIRE(mubs.size() == 6);
    for (std::size_t i = 0; i < mubs.size(); ++i) {
      for (std::size_t j = i + 1; j < mubs.size(); ++j) {
        CHECK(validate_mub_pair(mubs[i], mubs[j]).pass);
      }
    }
  }
  SUBCASE("non-prime dimensions are rejected") {
    CHECK_THROWS_AS((void)prime_pauli_mubs(4), UsageError);
    CHECK_THROWS_AS((void)prime_pauli_mubs(6), UsageError);
  }
}

TEST_CASE("SIC-POVM constructions") {
  SUBCASE("d = 2 tetrahedron overlaps") {
    const RankOnePovm sic = sic_povm(2);
    REQUIRE(sic.outcome_count() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(sic.vector(i).squaredNorm() == doctest::Approx(0.5).epsilon(1e-12));
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        // |<phi_i|phi_j>|^2 = d^2 |<f_i|f_j>|^2 = 1/3
        CHECK(4.0 * std::norm(sic.vector(i).dot(sic.vector(j))) ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-12));
      }
    }
    CHECK(validate_sic(sic).pass);
  }
  SUBCASE("index of coincidence on pure states is 1/3 for d = 2") {
    std::mt19937_64 rng(41);
    const RankOnePovm sic = sic_povm(2);
    for (int trial = 0; trial < 40; ++trial) {
      const Vector psi = random_pure_state(2, rng);
      const DensityMatrix rho = DensityMatrix::make(psi * psi.adjoint());
      CHECK(index_of_coincidence(probabilities(sic, rho)) ==
            doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
  }
  SUBCASE("index of coincidence on the maximally mixed qutrit is 1/9") {
    const RankOnePovm sic = sic_povm(3);
    CHECK(validate_sic(sic).pass);
    const DensityMatrix mixed = DensityMatrix::make(Matrix::Identity(3, 3) / 3.0);
    CHECK(index_of_coincidence(probabilities(sic, mixed)) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  }
  SUBCASE("unsupported dimensions") {
    CHECK_THROWS_AS((void)sic_povm(4), UsageError);
  }
}

TEST_CASE("index of coincidence closed forms") {
  std::mt19937_64 rng(43);
  SUBCASE("uniform distribution gives 1/d") {
    for (std::size_t d : {2u, 3u, 5u}) {
      const DensityMatrix mixed =
          DensityMatrix::make(Matrix::Identity(d, d) / static_cast<double>(d));
      CHECK(index_of_coincidence(probabilities(computational_basis(d), mixed)) ==
            doctest::Approx(1.0 / d).epsilon(1e-12));
    }
  }
  SUBCASE("SIC: sum p^2 = (Tr rho^2 + 1)/(d(d+1))") {
    for (std::size_t d : {2u, 3u}) {
      const RankOnePovm sic = sic_povm(d);
      for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_density(d, rng);
        const double expected = (rho.purity() + 1.0) / (d * (d + 1.0));
        CHECK(index_of_coincidence(probabilities(sic, rho)) ==
              doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
  SUBCASE("MUBs: sum_t sum_i p^2 <= Tr rho^2 + (K-1)/d") {
    for (std::size_t d : {2u, 3u, 5u}) {
      const std::vector<RankOnePovm> mubs = prime_pauli_mubs(d);
      for (int trial = 0; trial < 30; ++trial) {
        const DensityMatrix rho = random_density(d, rng);
        double total = 0.0;
        for (const RankOnePovm& basis : mubs) {
          total += index_of_coincidence(probabilities(basis, rho));
        }
        CHECK(total <= rho.purity() + static_cast<double>(mubs.size() - 1) / d + 1e-9);
        CHECK(total <= 1.0 + static_cast<double>(mubs.size() - 1) / d + 1e-9);
      }
    }
  }
}

TEST_CASE("MUM construction from MUBs") {
  SUBCASE("t = 1 reduces to the bases themselves") {
    const MumSet mums = mum_from_mubs(qubit_pauli_mubs(), 1.0);
    CHECK(mums.kappa == doctest::Approx(1.0));
    const Matrix p0 = mums.povms[0].elements()[0];
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK((p0 - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("d = 2, t = 1/2 has kappa = 0.625 and passes validation") {
    const MumSet mums = mum_from_mubs(qubit_pauli_mubs(), 0.5);
    CHECK(mums.kappa == doctest::Approx(0.625));
    CHECK(validate_mum(mums.povms, mums.kappa).pass);
    // Measured overlaps agree with the formula value.
    const Matrix n0 = mums.povms[0].elements()[0];
    CHECK((n0 * n0).trace().real() == doctest::Approx(0.625).epsilon(1e-12));
  }
  SUBCASE("t outside (0,1] and biased inputs are usage errors") {
    CHECK_THROWS_AS((void)mum_from_mubs(qubit_pauli_mubs(), 0.0), UsageError);
    CHECK_THROWS_AS((void)mum_from_mubs(qubit_pauli_mubs(), 1.2), UsageError);
    const std::vector<RankOnePovm> biased = {computational_basis(2),
                                             rotated_qubit_basis(kPi / 6.0)};
    CHECK_THROWS_AS((void)mum_from_mubs(biased, 0.5), UsageError);
  }
}

TEST_CASE("MUM index-of-coincidence bound saturates for complete sets") {
  std::mt19937_64 rng(47);
  for (std::size_t d : {2u, 3u}) {
    const MumSet mums = mum_from_mubs(prime_pauli_mubs(d), 0.7);
    const double dd = static_cast<double>(d);
    const double kk = dd + 1.0;
    for (int trial = 0; trial < 30; ++trial) {
      const DensityMatrix rho = random_density(d, rng);
      double total = 0.0;
      for (const GeneralPovm& povm : mums.povms) {
        total += index_of_coincidence(probabilities(povm, rho));
      }
      const double closed =
          (1.0 - mums.kappa + (mums.kappa * dd - 1.0) * rho.purity()) / (dd - 1.0) +
          (kk - 1.0) / dd;
      CHECK(total == doctest::Approx(closed).epsilon(1e-9));
      CHECK(total <= mums.kappa + (kk - 1.0) / dd + 1e-9);
    }
  }
}

TEST_CASE("general SIC construction from a SIC") {
  SUBCASE("t = 1 is the rank-one case a = 1/d^2") {
    const GeneralSic gsic = gsic_from_sic(sic_povm(2), 1.0);
    CHECK(gsic.purity_a == doctest::Approx(0.25));
    CHECK(validate_gsic(gsic.povm, gsic.purity_a).pass);
  }
  SUBCASE("d = 2, t = 1/2 purity from the overlap oracle") {
    const GeneralSic gsic = gsic_from_sic(sic_povm(2), 0.5);
    // Measured Tr(N^2) rather than the construction formula.
    const Matrix n0 = gsic.povm.elements()[0];
    const double measured = (n0 * n0).trace().real();
    CHECK(measured == doctest::Approx(0.15625).epsilon(1e-12));
    CHECK(gsic.purity_a == doctest::Approx(measured).epsilon(1e-12));
    CHECK(validate_gsic(gsic.povm, gsic.purity_a).pass);
  }
  SUBCASE("invalid input is rejected") {
    CHECK_THROWS_AS((void)gsic_from_sic(computational_basis(2), 0.5), UsageError);
    CHECK_THROWS_AS((void)gsic_from_sic(sic_povm(2), 0.0), UsageError);
  }
}

TEST_CASE("general SIC index-of-coincidence closed form") {
  std::mt19937_64 rng(53);
  for (std::size_t d : {2u, 3u}) {
    for (double t : {1.0, 0.9, 0.5}) {
      const GeneralSic gsic = gsic_from_sic(sic_povm(d), t);
      const double dd = static_cast<double>(d);
      for (int trial = 0; trial < 25; ++trial) {
        const DensityMatrix rho = random_density(d, rng);
        const double expected =
            ((gsic.purity_a * dd * dd * dd - 1.0) * rho.purity() + dd * (1.0 - gsic.purity_a * dd)) /
            (dd * (dd * dd - 1.0));
        CHECK(index_of_coincidence(probabilities(gsic.povm, rho)) ==
              doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("maximal overlap eta") {
  const RankOnePovm z = computational_basis(2);
  CHECK(eta(z, z) == doctest::Approx(1.0));
  const std::vector<RankOnePovm> mubs = qubit_pauli_mubs();
  CHECK(eta(mubs[0], mubs[1]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  for (double theta : {kPi / 6.0, kPi / 3.0, 0.2}) {
    const RankOnePovm rotated = rotated_qubit_basis(theta);
    CHECK(eta(z, rotated) ==
          doctest::Approx(std::max(std::cos(theta), std::sin(theta))).epsilon(1e-12));
    CHECK(eta(z, rotated) == doctest::Approx(eta(rotated, z)));
    CHECK(eta(z, rotated) > 0.0);
    CHECK(eta(z, rotated) <= 1.0 + 1e-12);
  }

  CHECK_THROWS_AS((void)eta(computational_basis(2), computational_basis(3)), UsageError);
}

TEST_CASE("overlap matrices have unit spectral norm") {
  const RankOnePovm z = computational_basis(2);
  CHECK((overlap_matrix(z, z) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    // Random basis pair via Haar unitaries.
    const Matrix u = random_unitary(3, rng);
    const Matrix v = random_unitary(3, rng);
    std::vector<Vector> ub, vb;
    for (int k = 0; k < 3; ++k) {
      ub.push_back(u.col(k));
      vb.push_back(v.col(k));
    }
    const RankOnePovm bu = RankOnePovm::make(3, ub);
    const RankOnePovm bv = RankOnePovm::make(3, vb);
    CHECK(spectral_norm(overlap_matrix(bu, bv)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  // Rank-one POVM pair (SIC vs SIC) also has a unit-norm overlap matrix.
  CHECK(spectral_norm(overlap_matrix(sic_povm(2), sic_povm(2))) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("validators report deviations without throwing") {
  const ValidationReport bad_pair =
      validate_mub_pair(computational_basis(2), rotated_qubit_basis(kPi / 6.0));
  CHECK_FALSE(bad_pair.pass);
  // Worst squared-overlap deviation: |cos(pi/6)|^2 - 1/2.
  CHECK(bad_pair.worst ==
        doctest::Approx(std::cos(kPi / 6.0) * std::cos(kPi / 6.0) - 0.5).epsilon(1e-12));

  std::vector<Vector> short_set = {computational_basis(2).vector(0)};
  CHECK_FALSE(validate_rank_one_povm(2, short_set).pass);

  std::vector<Matrix> not_psd = {Matrix::Identity(2, 2) * 1.5,
                                 -0.5 * Matrix::Identity(2, 2)};
  const ValidationReport psd_report = validate_general_povm(2, not_psd);
  CHECK_FALSE(psd_report.pass);
}

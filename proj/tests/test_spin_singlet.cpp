// Copyright 2026 The bellsim developers.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "bellsim/models.hpp"
#include "bellsim/spin_singlet.hpp"

using namespace bellsim;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

std::vector<HalfInteger> supportedSpins() {
    return {HalfInteger::fromTwice(1), HalfInteger::fromTwice(2),
            HalfInteger::fromTwice(3), HalfInteger::fromTwice(4),
            HalfInteger::fromTwice(5)};
}

Eigen::Vector3d randomUnit(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
    return v.normalized();
}
} // namespace

TEST_CASE("jz is diagonal with entries m") {
    const auto half = buildOperators(HalfInteger::fromTwice(1));
    CHECK(half.jz(0, 0) == std::complex<double>(0.5));
    CHECK(half.jz(1, 1) == std::complex<double>(-0.5));
    CHECK(half.jz(0, 1) == std::complex<double>(0.0));

    const auto one = buildOperators(HalfInteger::fromTwice(2));
    CHECK(one.jz(0, 0) == std::complex<double>(1.0));
    CHECK(one.jz(1, 1) == std::complex<double>(0.0));
    CHECK(one.jz(2, 2) == std::complex<double>(-1.0));
}

TEST_CASE("operator range check") {
    CHECK_THROWS_AS(buildOperators(HalfInteger::fromTwice(27)),
                    std::domain_error);
}

TEST_CASE("commutators and Casimir") {
    // [jx, jy] = i jz exactly for spin 1/2 (Pauli/2 algebra).
    const auto half = buildOperators(HalfInteger::fromTwice(1));
    CHECK((half.jx * half.jy - half.jy * half.jx - kI * half.jz).norm() ==
          0.0);

    for (const auto j : supportedSpins()) {
        const auto ops = buildOperators(j);
        const auto comm_xy = ops.jx * ops.jy - ops.jy * ops.jx - kI * ops.jz;
        const auto comm_yz = ops.jy * ops.jz - ops.jz * ops.jy - kI * ops.jx;
        const auto comm_zx = ops.jz * ops.jx - ops.jx * ops.jz - kI * ops.jy;
        CHECK(comm_xy.norm() < 1e-12);
        CHECK(comm_yz.norm() < 1e-12);
        CHECK(comm_zx.norm() < 1e-12);

        const Eigen::MatrixXcd casimir =
            ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
        const Eigen::MatrixXcd expected =
            j.casimir() *
            Eigen::MatrixXcd::Identity(j.dimension(), j.dimension());
        CHECK((casimir - expected).norm() < 1e-12);
    }
}

TEST_CASE("direction operator is Hermitian") {
    std::mt19937_64 rng(4);
    for (const auto j : supportedSpins()) {
        const auto ops = buildOperators(j);
        for (int i = 0; i < 5; ++i) {
            const auto op = directionOperator(ops, randomUnit(rng));
            CHECK((op - op.adjoint()).norm() < 1e-12);
        }
    }
    const auto ops = buildOperators(HalfInteger::fromTwice(1));
    CHECK_THROWS_AS(directionOperator(ops, Eigen::Vector3d(1, 1, 0)),
                    std::domain_error);
}

TEST_CASE("singlet state for spin 1/2 is the textbook singlet") {
    const auto psi = buildSinglet(HalfInteger::fromTwice(1));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(psi(1).real() == doctest::Approx(r));  // |up down>
    CHECK(psi(2).real() == doctest::Approx(-r)); // |down up>
    CHECK(std::abs(psi(0)) == 0.0);
    CHECK(std::abs(psi(3)) == 0.0);
}

TEST_CASE("singlet state invariants") {
    for (const auto j : supportedSpins()) {
        const auto psi = buildSinglet(j);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);

        const auto ops = buildOperators(j);
        const int d = j.dimension();
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
        const auto total = [&](const Eigen::MatrixXcd &op) {
            return (Eigen::kroneckerProduct(op, id) +
                    Eigen::kroneckerProduct(id, op))
                .eval();
        };
        const Eigen::MatrixXcd tz = total(ops.jz);
        CHECK((tz * psi).norm() < 1e-12);

        const Eigen::MatrixXcd tx = total(ops.jx);
        const Eigen::MatrixXcd ty = total(ops.jy);
        const Eigen::MatrixXcd jsq = tx * tx + ty * ty + tz * tz;
        CHECK((jsq * psi).norm() < 1e-10);
    }
}

TEST_CASE("correlation examples") {
    const Eigen::Vector3d z(0, 0, 1);
    CHECK(correlation(HalfInteger::fromTwice(1), z, z) ==
          doctest::Approx(-0.25).epsilon(1e-12));
    const Eigen::Vector3d x(1, 0, 0);
    CHECK(std::abs(correlation(HalfInteger::fromTwice(2), z, x)) < 1e-12);
    // j = 2, theta = pi/3: -(2*3/3) * cos(pi/3) = -1.
    const Eigen::Vector3d tilted(std::sin(kPi / 3.0), 0.0, std::cos(kPi / 3.0));
    CHECK(correlation(HalfInteger::fromTwice(4), z, tilted) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(
        correlation(HalfInteger::fromTwice(1), z, Eigen::Vector3d(0, 0, 2)),
        std::domain_error);
}

TEST_CASE("matrix contraction matches the closed form on a theta grid") {
    for (const auto j : supportedSpins()) {
        const SingletCorrelator correlator(j);
        const Eigen::Vector3d alpha(0, 0, 1);
        for (int i = 0; i <= 20; ++i) {
            const double theta = kPi * i / 20.0;
            const Eigen::Vector3d beta(std::sin(theta), 0.0, std::cos(theta));
            const double c = correlator.correlation(alpha, beta);
            const double closed =
                spinCorrelationClosedForm(j, Angle(std::min(theta, kPi)));
            CHECK(std::abs(c - closed) < 1e-10);
        }
    }
}

TEST_CASE("correlation depends only on the relative angle") {
    std::mt19937_64 rng(8);
    const auto j = HalfInteger::fromTwice(3);
    const SingletCorrelator correlator(j);
    for (int i = 0; i < 10; ++i) {
        const double theta = 0.1 + 2.9 * (i / 10.0);
        const Eigen::Vector3d axis = randomUnit(rng);
        const double roll = 2.0 * kPi * (rng() >> 11) * 0x1.0p-53;
        const Eigen::Matrix3d rot =
            Eigen::AngleAxisd(roll, axis).toRotationMatrix();
        const Eigen::Vector3d alpha = rot * Eigen::Vector3d(0, 0, 1);
        const Eigen::Vector3d beta =
            rot * Eigen::Vector3d(std::sin(theta), 0.0, std::cos(theta));
        const double rotated = correlator.correlation(alpha, beta);
        const double reference =
            spinCorrelationClosedForm(j, Angle(theta));
        CHECK(std::abs(rotated - reference) < 1e-10);
    }
}

TEST_CASE("with alpha along z, the full contraction reduces to the beta_z "
          "shortcut") {
    std::mt19937_64 rng(15);
    const Eigen::Vector3d z(0, 0, 1);
    for (const auto j : supportedSpins()) {
        const SingletCorrelator correlator(j);
        const double sum_m2 =
            static_cast<double>(sumTwiceMSquared(j)) / 4.0;
        for (int i = 0; i < 5; ++i) {
            const Eigen::Vector3d beta = randomUnit(rng);
            const double shortcut =
                -(sum_m2 / (2.0 * j.value() + 1.0)) * beta.z();
            CHECK(std::abs(correlator.correlation(z, beta) - shortcut) <
                  1e-10);
        }
    }
}

TEST_CASE("normalized correlation equals -cos(theta) for every j") {
    CHECK(normalizedCorrelation(HalfInteger::fromTwice(1), Angle(kPi)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(normalizedCorrelation(HalfInteger::fromTwice(5),
                                         Angle(kPi / 2.0))) < 1e-12);
    CHECK(normalizedCorrelation(HalfInteger::fromTwice(3),
                                Angle(2.0 * kPi / 3.0)) ==
          doctest::Approx(0.5).epsilon(1e-12));

    for (int i = 0; i <= 10; ++i) {
        const Angle theta(kPi * i / 10.0);
        const double reference =
            normalizedCorrelation(HalfInteger::fromTwice(1), theta);
        for (const auto j : supportedSpins()) {
            CHECK(std::abs(normalizedCorrelation(j, theta) - reference) <
                  1e-10);
        }
    }
}

TEST_CASE("sum of m^2 identity, exact in integer arithmetic") {
    for (int tj = 1; tj <= 25; ++tj) {
        const auto j = HalfInteger::fromTwice(tj);
        CHECK(sumTwiceMSquared(j) == sumTwiceMSquaredClosedForm(j));
    }
}

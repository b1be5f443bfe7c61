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
#include "bellsim/spin_singlet.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace bellsim {

namespace {
constexpr int kMaxTwiceJ = 25; // j <= 25/2; dense 26x26 matrices at most

void requireSupported(HalfInteger j) {
    if (j.twice() > kMaxTwiceJ) {
        throw std::domain_error("spin j exceeds the supported maximum 25/2");
    }
}
} // namespace

SpinOperators buildOperators(HalfInteger j) {
    requireSupported(j);
    const int d = j.dimension();
    const double jj = j.casimir();

    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(d, d);
    for (int p = 0; p < d; ++p) {
        const double m = j.value() - p; // row p holds |j, m>
        jz(p, p) = m;
        if (p > 0) {
            // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
            jplus(p - 1, p) = std::sqrt(jj - m * (m + 1.0));
        }
    }
    Eigen::MatrixXcd jminus = jplus.adjoint();
    Eigen::MatrixXcd jx = 0.5 * (jplus + jminus);
    Eigen::MatrixXcd jy =
        std::complex<double>(0.0, -0.5) * (jplus - jminus);
    return {j, std::move(jz), std::move(jplus), std::move(jminus),
            std::move(jx), std::move(jy)};
}

Eigen::MatrixXcd directionOperator(const SpinOperators &ops,
                                   const Eigen::Vector3d &n) {
    requireUnit(n);
    return n.x() * ops.jx + n.y() * ops.jy + n.z() * ops.jz;
}

Eigen::VectorXcd buildSinglet(HalfInteger j) {
    requireSupported(j);
    const int d = j.dimension();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int p = 0; p < d; ++p) {
        // |j,m> (x) |j,-m> with m = j - p; phase (-1)^(j-m) = (-1)^p.
        const double phase = (p % 2 == 0) ? 1.0 : -1.0;
        psi(p * d + (d - 1 - p)) = phase * norm;
    }
    return psi;
}

SingletCorrelator::SingletCorrelator(HalfInteger j)
    : ops_(buildOperators(j)), singlet_(buildSinglet(j)) {}

double SingletCorrelator::correlation(const Eigen::Vector3d &alpha,
                                      const Eigen::Vector3d &beta) const {
    const Eigen::MatrixXcd op_a = directionOperator(ops_, alpha);
    const Eigen::MatrixXcd op_b = directionOperator(ops_, beta);
    const Eigen::MatrixXcd joint = Eigen::kroneckerProduct(op_a, op_b);
    const std::complex<double> c = singlet_.adjoint() * joint * singlet_;
    if (std::abs(c.imag()) > 1e-12) {
        throw std::runtime_error(
            "singlet correlation has a nonvanishing imaginary part");
    }
    return c.real();
}

double correlation(HalfInteger j, const Eigen::Vector3d &alpha,
                   const Eigen::Vector3d &beta) {
    return SingletCorrelator(j).correlation(alpha, beta);
}

double normalizedCorrelation(HalfInteger j, Angle theta) {
    const Eigen::Vector3d alpha(0.0, 0.0, 1.0);
    const Eigen::Vector3d beta(std::sin(theta.radians()), 0.0,
                               std::cos(theta.radians()));
    return (3.0 / j.casimir()) * correlation(j, alpha, beta);
}

std::int64_t sumTwiceMSquared(HalfInteger j) {
    std::int64_t sum = 0;
    for (int tm = -j.twice(); tm <= j.twice(); tm += 2) {
        sum += static_cast<std::int64_t>(tm) * tm;
    }
    return sum;
}

std::int64_t sumTwiceMSquaredClosedForm(HalfInteger j) {
    const std::int64_t tj = j.twice();
    return tj * (tj + 1) * (tj + 2) / 3;
}

} // namespace bellsim

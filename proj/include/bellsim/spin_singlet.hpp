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
#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "bellsim/angle.hpp"
#include "bellsim/half_integer.hpp"

namespace bellsim {

/// Angular momentum matrices in the |j,m> basis, m = j .. -j (row 0 = m = j).
struct SpinOperators {
    HalfInteger j;
    Eigen::MatrixXcd jz;
    Eigen::MatrixXcd jplus;
    Eigen::MatrixXcd jminus;
    Eigen::MatrixXcd jx;
    Eigen::MatrixXcd jy;
};

/// Ladder construction: jz diagonal with entries m, <j,m+1|J+|j,m> =
/// sqrt(j(j+1) - m(m+1)), jx = (J+ + J-)/2, jy = (J+ - J-)/(2i).
/// Supported range 1/2 <= j <= 25/2.
SpinOperators buildOperators(HalfInteger j);

/// n . J for a unit vector n; Hermitian for real n.
Eigen::MatrixXcd directionOperator(const SpinOperators &ops,
                                   const Eigen::Vector3d &n);

/// Two-particle total angular momentum zero state on the product basis
/// |j,m> (x) |j,m'>, coefficient (-1)^(j-m)/sqrt(2j+1) on |j,m>|j,-m>.
Eigen::VectorXcd buildSinglet(HalfInteger j);

/// Caches the operators and state of one spin-j singlet so repeated
/// correlation evaluations do not rebuild matrices.
class SingletCorrelator {
  public:
    explicit SingletCorrelator(HalfInteger j);

    /// C = <00| alpha.J (x) beta.J |00> by explicit tensor-product
    /// contraction. The result must be real to within 1e-12; the imaginary
    /// part is checked and discarded. Equals -j(j+1)/3 * cos(theta).
    double correlation(const Eigen::Vector3d &alpha,
                       const Eigen::Vector3d &beta) const;

    const SpinOperators &operators() const { return ops_; }
    const Eigen::VectorXcd &state() const { return singlet_; }

  private:
    SpinOperators ops_;
    Eigen::VectorXcd singlet_;
};

/// One-shot contraction C(theta) at arbitrary directions.
double correlation(HalfInteger j, const Eigen::Vector3d &alpha,
                   const Eigen::Vector3d &beta);

/// 3/[j(j+1)] * C(theta), evaluated with alpha along z and beta at angle
/// theta in the x-z plane; equals -cos(theta) for every j.
double normalizedCorrelation(HalfInteger j, Angle theta);

/// sum over m = -j..j of (2m)^2, exact in integer arithmetic.
std::int64_t sumTwiceMSquared(HalfInteger j);

/// Closed form 2j(2j+1)(2j+2)/3 for the same sum (i.e. 4 * j(j+1)(2j+1)/3).
std::int64_t sumTwiceMSquaredClosedForm(HalfInteger j);

} // namespace bellsim

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

#include <Eigen/Dense>

namespace bellsim {

/// Relative measurement angle theta, restricted to [0, pi].
///
/// Construction from a pair of unit vectors goes through arccos of the dot
/// product, with the dot product clamped to [-1, 1] to absorb rounding.
class Angle {
  public:
    /// Throws std::domain_error for radians outside [0, pi].
    explicit Angle(double radians);

    static Angle between(const Eigen::Vector2d &a, const Eigen::Vector2d &b);
    static Angle between(const Eigen::Vector3d &a, const Eigen::Vector3d &b);

    /// Angle between two in-plane directions given by their polar angles,
    /// reduced to [0, pi].
    static Angle fromPolarDifference(double phi_a, double phi_b);

    double radians() const { return theta_; }

  private:
    double theta_;
};

/// Unit vector in the measurement plane at polar angle phi.
Eigen::Vector2d unitFromPolar(double phi);

/// Throws std::domain_error unless v has unit norm (within 1e-9).
void requireUnit(const Eigen::Vector2d &v);
void requireUnit(const Eigen::Vector3d &v);

} // namespace bellsim

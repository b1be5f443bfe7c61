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
#include "bellsim/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellsim {

namespace {
constexpr double kPi = std::numbers::pi;

template <typename Vec> void requireUnitImpl(const Vec &v) {
    if (std::abs(v.norm() - 1.0) > 1e-9) {
        throw std::domain_error("measurement direction must be a unit vector");
    }
}

template <typename Vec> Angle betweenImpl(const Vec &a, const Vec &b) {
    requireUnitImpl(a);
    requireUnitImpl(b);
    const double dot = std::clamp(a.dot(b), -1.0, 1.0);
    return Angle(std::acos(dot));
}
} // namespace

Angle::Angle(double radians) : theta_(radians) {
    if (!(radians >= 0.0 && radians <= kPi)) {
        throw std::domain_error("angle must lie in [0, pi]");
    }
}

Angle Angle::between(const Eigen::Vector2d &a, const Eigen::Vector2d &b) {
    return betweenImpl(a, b);
}

Angle Angle::between(const Eigen::Vector3d &a, const Eigen::Vector3d &b) {
    return betweenImpl(a, b);
}

Angle Angle::fromPolarDifference(double phi_a, double phi_b) {
    double d = std::abs(phi_a - phi_b);
    d = std::fmod(d, 2.0 * kPi);
    if (d > kPi) {
        d = 2.0 * kPi - d;
    }
    return Angle(d);
}

Eigen::Vector2d unitFromPolar(double phi) {
    return {std::cos(phi), std::sin(phi)};
}

void requireUnit(const Eigen::Vector2d &v) { requireUnitImpl(v); }
void requireUnit(const Eigen::Vector3d &v) { requireUnitImpl(v); }

} // namespace bellsim

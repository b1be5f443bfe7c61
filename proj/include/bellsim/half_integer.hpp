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

#include <cmath>
#include <stdexcept>

namespace bellsim {

/// Spin label j in {1/2, 1, 3/2, ...}, stored as the integer 2j.
class HalfInteger {
  public:
    static HalfInteger fromTwice(int twice_j) {
        if (twice_j < 1) {
            throw std::domain_error("spin j must be a positive half-integer");
        }
        return HalfInteger(twice_j);
    }

    static HalfInteger fromDouble(double j) {
        const double twice = 2.0 * j;
        if (!(twice >= 1.0) || std::abs(twice - std::round(twice)) > 1e-9) {
            throw std::domain_error("spin j must be a positive half-integer");
        }
        return HalfInteger(static_cast<int>(std::llround(twice)));
    }

    int twice() const { return twice_; }
    double value() const { return 0.5 * twice_; }
    /// Dimension 2j+1 of the |j,m> multiplet.
    int dimension() const { return twice_ + 1; }
    /// j(j+1)
    double casimir() const { return 0.25 * twice_ * (twice_ + 2); }

    friend bool operator==(HalfInteger a, HalfInteger b) {
        return a.twice_ == b.twice_;
    }

  private:
    explicit HalfInteger(int twice_j) : twice_(twice_j) {}
    int twice_;
};

} // namespace bellsim

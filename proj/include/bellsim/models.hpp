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

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "bellsim/angle.hpp"
#include "bellsim/half_integer.hpp"

namespace bellsim {

// Expectation functions E(theta) for two dichotomic +-1 observables at
// relative angle theta. All values lie in [-1, 1].

/// Local-realistic expectation E(theta) = 2*theta/pi - 1
/// (equal-sign probability theta/pi).
double evalClassical(Angle theta);

/// Singlet expectation E_qm(theta) = -cos(theta).
double evalQuantum(Angle theta);

/// Unnormalized spin-j singlet correlation C(theta) = -j(j+1)/3 * cos(theta).
double spinCorrelationClosedForm(HalfInteger j, Angle theta);

/// 3/[j(j+1)] * C(theta); equals -cos(theta) for every j.
double evalSpinJNormalized(HalfInteger j, Angle theta);

/// Stronger-than-quantum expectation E_s(theta) = sgn(2*theta/pi - 1),
/// with sgn(0) = 0 at theta = pi/2.
double evalStrong(Angle theta);

class CorrelationModel;

/// Weaker-than-classical mixing: (1 - eta) * base(theta). eta in [0, 1];
/// eta = 1 washes the signal out entirely.
double evalNoisy(const CorrelationModel &base, double eta, Angle theta);

/// E_qm = -cos(pi/2 * (E + 1)); maps [-1,1] onto [-1,1].
double classicalToQuantum(double e);

/// Inverse map E = 2*arccos(-E_qm)/pi - 1.
double quantumToClassical(double eq);

/// Quasi-quantum weighting of N normalized per-trial products
/// R^i = r_alpha^i r_beta^i / N:  -cos(pi/2 * (sum R^i + 1)).
/// Throws std::domain_error if |sum| exceeds 1 (malformed normalization).
double evalQuasiQuantum(std::span<const double> outcome_products);

enum class SgnSeriesForm { Sine, Cosine };

/// Truncated Fourier series of sgn(x) on (-pi, pi):
///   Sine:   4/pi * sum_{n<terms} sin[(2n+1)x] / (2n+1)
///   Cosine: 4/pi * sum_{n<terms} (-1)^n cos[(2n+1)(x - pi/2)] / (2n+1)
/// The two forms agree termwise.
double fourierSgnPartialSum(double x, int terms, SgnSeriesForm form);

/// Tagged family of expectation functions theta -> E(theta).
class CorrelationModel {
  public:
    enum class Kind { Classical, Quantum, SpinJ, Strong, Noisy, QuasiQuantum };

    static CorrelationModel classical();
    static CorrelationModel quantum();
    static CorrelationModel spinJ(HalfInteger j);
    static CorrelationModel strong();
    static CorrelationModel noisy(CorrelationModel base, double eta);
    static CorrelationModel quasiQuantum();

    Kind kind() const { return kind_; }
    double evaluate(Angle theta) const;
    std::string name() const;

    const std::optional<HalfInteger> &spin() const { return j_; }
    double eta() const { return eta_; }
    const CorrelationModel &base() const;

  private:
    CorrelationModel(Kind kind) : kind_(kind) {}
    Kind kind_;
    std::optional<HalfInteger> j_;
    double eta_ = 0.0;
    std::shared_ptr<const CorrelationModel> base_;
};

} // namespace bellsim

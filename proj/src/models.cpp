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
#include "bellsim/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellsim {

namespace {
constexpr double kPi = std::numbers::pi;

void requireExpectation(double e) {
    if (!(e >= -1.0 && e <= 1.0)) {
        throw std::domain_error("expectation value must lie in [-1, 1]");
    }
}
} // namespace

double evalClassical(Angle theta) { return 2.0 * theta.radians() / kPi - 1.0; }

double evalQuantum(Angle theta) { return -std::cos(theta.radians()); }

double spinCorrelationClosedForm(HalfInteger j, Angle theta) {
    return -(j.casimir() / 3.0) * std::cos(theta.radians());
}

double evalSpinJNormalized(HalfInteger j, Angle theta) {
    return (3.0 / j.casimir()) * spinCorrelationClosedForm(j, theta);
}

double evalStrong(Angle theta) {
    const double x = evalClassical(theta);
    if (x < 0.0) {
        return -1.0;
    }
    if (x > 0.0) {
        return 1.0;
    }
    return 0.0;
}

double evalNoisy(const CorrelationModel &base, double eta, Angle theta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::domain_error("noise fraction eta must lie in [0, 1]");
    }
    return (1.0 - eta) * base.evaluate(theta);
}

double classicalToQuantum(double e) {
    requireExpectation(e);
    return -std::cos(kPi / 2.0 * (e + 1.0));
}

double quantumToClassical(double eq) {
    requireExpectation(eq);
    return 2.0 * std::acos(-eq) / kPi - 1.0;
}

double evalQuasiQuantum(std::span<const double> outcome_products) {
    double sum = 0.0;
    for (double r : outcome_products) {
        sum += r;
    }
    if (std::abs(sum) > 1.0 + 1e-12) {
        throw std::domain_error(
            "quasi-quantum products are not normalized: |sum R^i| > 1");
    }
    sum = std::clamp(sum, -1.0, 1.0);
    return -std::cos(kPi / 2.0 * (sum + 1.0));
}

double fourierSgnPartialSum(double x, int terms, SgnSeriesForm form) {
    if (!(x > -kPi && x < kPi)) {
        throw std::domain_error("sgn series argument must lie in (-pi, pi)");
    }
    if (terms < 1) {
        throw std::invalid_argument("truncation order must be >= 1");
    }
    double sum = 0.0;
    if (form == SgnSeriesForm::Sine) {
        for (int n = 0; n < terms; ++n) {
            const double k = 2.0 * n + 1.0;
            sum += std::sin(k * x) / k;
        }
    } else {
        double sign = 1.0;
        for (int n = 0; n < terms; ++n) {
            const double k = 2.0 * n + 1.0;
            sum += sign * std::cos(k * (x - kPi / 2.0)) / k;
            sign = -sign;
        }
    }
    return 4.0 / kPi * sum;
}

CorrelationModel CorrelationModel::classical() {
    return CorrelationModel(Kind::Classical);
}

CorrelationModel CorrelationModel::quantum() {
    return CorrelationModel(Kind::Quantum);
}

CorrelationModel CorrelationModel::spinJ(HalfInteger j) {
    CorrelationModel m(Kind::SpinJ);
    m.j_ = j;
    return m;
}

CorrelationModel CorrelationModel::strong() {
    return CorrelationModel(Kind::Strong);
}

CorrelationModel CorrelationModel::noisy(CorrelationModel base, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::domain_error("noise fraction eta must lie in [0, 1]");
    }
    CorrelationModel m(Kind::Noisy);
    m.eta_ = eta;
    m.base_ = std::make_shared<CorrelationModel>(std::move(base));
    return m;
}

CorrelationModel CorrelationModel::quasiQuantum() {
    return CorrelationModel(Kind::QuasiQuantum);
}

const CorrelationModel &CorrelationModel::base() const {
    if (!base_) {
        throw std::logic_error("model has no base");
    }
    return *base_;
}

double CorrelationModel::evaluate(Angle theta) const {
    switch (kind_) {
    case Kind::Classical:
        return evalClassical(theta);
    case Kind::Quantum:
        return evalQuantum(theta);
    case Kind::SpinJ:
        return evalSpinJNormalized(*j_, theta);
    case Kind::Strong:
        return evalStrong(theta);
    case Kind::Noisy:
        return evalNoisy(*base_, eta_, theta);
    case Kind::QuasiQuantum:
        // The quasi-quantum weighting of infinitely many classical trials.
        return classicalToQuantum(evalClassical(theta));
    }
    throw std::logic_error("unreachable");
}

std::string CorrelationModel::name() const {
    switch (kind_) {
    case Kind::Classical:
        return "classical";
    case Kind::Quantum:
        return "quantum";
    case Kind::SpinJ:
        return "spin-j";
    case Kind::Strong:
        return "strong";
    case Kind::Noisy:
        return "noisy(" + base_->name() + ")";
    case Kind::QuasiQuantum:
        return "quasi-quantum";
    }
    throw std::logic_error("unreachable");
}

} // namespace bellsim

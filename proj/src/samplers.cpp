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
#include "bellsim/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {
// sgn with the measure-zero tie resolved to +1 so sampling stays dichotomic.
int signPlus(double x) { return x < 0.0 ? -1 : 1; }
} // namespace

void JointDistribution::validate() const {
    constexpr double tol = 1e-12;
    if (p_pp < -tol || p_pm < -tol || p_mp < -tol || p_mm < -tol) {
        throw std::domain_error("box probabilities must be nonnegative");
    }
    if (std::abs(p_pp + p_pm + p_mp + p_mm - 1.0) > tol) {
        throw std::domain_error("box probabilities must sum to 1");
    }
    if (std::abs(p_pp + p_pm - 0.5) > tol ||
        std::abs(p_pp + p_mp - 0.5) > tol) {
        throw std::domain_error("box marginals must be uniform");
    }
}

JointDistribution boxFromExpectation(double e) {
    if (!(e >= -1.0 && e <= 1.0)) {
        throw std::domain_error("expectation value must lie in [-1, 1]");
    }
    const double same = (1.0 + e) / 4.0;
    const double diff = (1.0 - e) / 4.0;
    return {same, diff, diff, same};
}

OutcomePair lhvOutcomes(const Eigen::Vector2d &alpha,
                        const Eigen::Vector2d &beta, double phi) {
    const Eigen::Vector2d j_a = unitFromPolar(phi);
    return {signPlus(alpha.dot(j_a)), signPlus(beta.dot(-j_a))};
}

OutcomePair sampleLhv(const Eigen::Vector2d &alpha,
                      const Eigen::Vector2d &beta, SeededGenerator &gen) {
    requireUnit(alpha);
    requireUnit(beta);
    return lhvOutcomes(alpha, beta, gen.uniformAngle());
}

OutcomePair sampleBox(const JointDistribution &dist, SeededGenerator &gen) {
    dist.validate();
    const double u = gen.uniform01();
    if (u < dist.p_pp) {
        return {1, 1};
    }
    if (u < dist.p_pp + dist.p_pm) {
        return {1, -1};
    }
    if (u < dist.p_pp + dist.p_pm + dist.p_mp) {
        return {-1, 1};
    }
    return {-1, -1};
}

std::vector<SettingPair> canonicalSettings(const DirectionConfig &dirs) {
    const Eigen::Vector2d ap = unitFromPolar(dirs.alpha_prime);
    const Eigen::Vector2d a = unitFromPolar(dirs.alpha);
    const Eigen::Vector2d b = unitFromPolar(dirs.beta);
    const Eigen::Vector2d bp = unitFromPolar(dirs.beta_prime);
    return {{"ap_b", ap, b}, {"a_b", a, b}, {"a_bp", a, bp}, {"ap_bp", ap, bp}};
}

OutcomePair samplePair(const CorrelationModel &model,
                       const Eigen::Vector2d &alpha,
                       const Eigen::Vector2d &beta, SeededGenerator &gen) {
    if (model.kind() == CorrelationModel::Kind::Classical) {
        return sampleLhv(alpha, beta, gen);
    }
    const Angle theta = Angle::between(alpha, beta);
    return sampleBox(boxFromExpectation(model.evaluate(theta)), gen);
}

std::vector<TrialRecord> runSeries(const CorrelationModel &model,
                                   const std::vector<SettingPair> &settings,
                                   std::int64_t n_trials,
                                   SeededGenerator &gen) {
    if (settings.empty()) {
        throw std::invalid_argument("at least one setting pair is required");
    }
    if (n_trials < 1) {
        throw std::invalid_argument("n_trials must be >= 1");
    }
    for (const auto &s : settings) {
        requireUnit(s.alpha);
        requireUnit(s.beta);
    }

    std::vector<TrialRecord> records;
    records.reserve(static_cast<std::size_t>(n_trials));

    if (model.kind() == CorrelationModel::Kind::Classical) {
        // One hidden variable per trial shared across every setting, so the
        // per-direction outcomes are mutually consistent (the four-list
        // protocol relies on this).
        for (std::int64_t i = 0; i < n_trials; ++i) {
            TrialRecord rec;
            rec.index = i;
            rec.phi = gen.uniformAngle();
            rec.outcomes.reserve(settings.size());
            for (const auto &s : settings) {
                rec.outcomes.push_back(lhvOutcomes(s.alpha, s.beta, *rec.phi));
            }
            records.push_back(std::move(rec));
        }
        return records;
    }

    // Nonclassical models: each setting pair sampled from its own joint box.
    std::vector<JointDistribution> boxes;
    boxes.reserve(settings.size());
    for (const auto &s : settings) {
        const Angle theta = Angle::between(s.alpha, s.beta);
        boxes.push_back(boxFromExpectation(model.evaluate(theta)));
    }
    for (std::int64_t i = 0; i < n_trials; ++i) {
        TrialRecord rec;
        rec.index = i;
        rec.outcomes.reserve(settings.size());
        for (const auto &box : boxes) {
            rec.outcomes.push_back(sampleBox(box, gen));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace bellsim

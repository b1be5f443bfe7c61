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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellsim/angle.hpp"
#include "bellsim/models.hpp"
#include "bellsim/rng.hpp"

namespace bellsim {

/// One pair of dichotomic outcomes; both entries strictly +-1.
struct OutcomePair {
    int a;
    int b;

    friend bool operator==(const OutcomePair &, const OutcomePair &) = default;
};

/// Joint distribution of a correlated +-1 pair with uniform marginals
/// (no-signalling box).
struct JointDistribution {
    double p_pp, p_pm, p_mp, p_mm;

    /// Throws std::domain_error on negative entries, sum != 1, or biased
    /// marginals (tolerance 1e-12).
    void validate() const;

    double expectation() const { return p_pp + p_mm - p_pm - p_mp; }
};

/// p_pp = p_mm = (1+e)/4, p_pm = p_mp = (1-e)/4 so that E = p_= - p_!=.
JointDistribution boxFromExpectation(double e);

/// Deterministic outcome map of the planar hidden-variable mechanism:
/// shared momenta j^A at polar angle phi, j^B = -j^A, outcomes
/// sgn(alpha . j^A) and sgn(beta . j^B). sgn(0) resolves to +1
/// (measure-zero under continuous phi).
OutcomePair lhvOutcomes(const Eigen::Vector2d &alpha,
                        const Eigen::Vector2d &beta, double phi);

/// Draws phi uniform on [0, 2*pi) and applies lhvOutcomes. Over N trials the
/// empirical correlation converges to 2*theta/pi - 1 at rate O(1/sqrt(N)).
OutcomePair sampleLhv(const Eigen::Vector2d &alpha,
                      const Eigen::Vector2d &beta, SeededGenerator &gen);

/// Samples an outcome pair from a validated joint box distribution.
OutcomePair sampleBox(const JointDistribution &dist, SeededGenerator &gen);

/// One pair of measurement directions with a stable label for reports.
struct SettingPair {
    std::string label;
    Eigen::Vector2d alpha;
    Eigen::Vector2d beta;
};

/// Polar angles of the four measurement directions. Defaults are the
/// maximal-violation settings alpha'=0, alpha=pi/2, beta=pi/4, beta'=3pi/4.
struct DirectionConfig {
    double alpha_prime = 0.0;
    double alpha = 1.5707963267948966;      // pi/2
    double beta = 0.7853981633974483;       // pi/4
    double beta_prime = 2.356194490192345;  // 3*pi/4
};

/// The four canonical setting pairs (a',b), (a,b), (a,b'), (a',b') with
/// labels "ap_b", "a_b", "a_bp", "ap_bp".
std::vector<SettingPair> canonicalSettings(const DirectionConfig &dirs);

/// One experiment: one outcome pair per setting. For the classical model all
/// pairs in a trial derive from the single stored hidden variable phi, so the
/// per-direction outcomes are mutually consistent across settings.
struct TrialRecord {
    std::int64_t index = 0;
    std::vector<OutcomePair> outcomes;
    std::optional<double> phi;
};

/// Samples one outcome pair for the model at the given directions: the
/// genuine hidden-variable mechanism for the classical model, the joint box
/// for every other model.
OutcomePair samplePair(const CorrelationModel &model,
                       const Eigen::Vector2d &alpha,
                       const Eigen::Vector2d &beta, SeededGenerator &gen);

/// Runs n_trials experiments over the given setting pairs.
std::vector<TrialRecord> runSeries(const CorrelationModel &model,
                                   const std::vector<SettingPair> &settings,
                                   std::int64_t n_trials,
                                   SeededGenerator &gen);

} // namespace bellsim

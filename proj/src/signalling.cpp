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
#include "bellsim/signalling.hpp"

#include <cmath>
#include <stdexcept>

#include "bellsim/samplers.hpp"

namespace bellsim {

std::vector<MarginalReport>
marginalScan(const CorrelationModel &model, const Eigen::Vector2d &alpha_fixed,
             const std::vector<Eigen::Vector2d> &beta_grid,
             std::int64_t n_trials, SeededGenerator &gen) {
    if (beta_grid.empty()) {
        throw std::invalid_argument("beta grid must be nonempty");
    }
    if (n_trials < 1) {
        throw std::invalid_argument("n_trials must be >= 1");
    }
    requireUnit(alpha_fixed);

    std::vector<MarginalReport> reports;
    reports.reserve(beta_grid.size());
    for (std::size_t i = 0; i < beta_grid.size(); ++i) {
        requireUnit(beta_grid[i]);
        SeededGenerator point_gen = gen.substream(i);
        std::int64_t sum_a = 0;
        std::int64_t sum_b = 0;
        for (std::int64_t t = 0; t < n_trials; ++t) {
            const OutcomePair p =
                samplePair(model, alpha_fixed, beta_grid[i], point_gen);
            sum_a += p.a;
            sum_b += p.b;
        }
        const double n = static_cast<double>(n_trials);
        reports.push_back({"beta_" + std::to_string(i),
                           static_cast<double>(sum_a) / n,
                           static_cast<double>(sum_b) / n, n_trials,
                           1.0 / std::sqrt(n)});
    }
    return reports;
}

SequenceRelation sequenceRelation(const CorrelationModel &model, Angle theta,
                                  std::int64_t n_trials,
                                  SeededGenerator &gen) {
    if (n_trials < 1) {
        throw std::invalid_argument("n_trials must be >= 1");
    }
    const Eigen::Vector2d alpha = unitFromPolar(0.0);
    const Eigen::Vector2d beta = unitFromPolar(theta.radians());

    std::int64_t equal = 0;
    for (std::int64_t t = 0; t < n_trials; ++t) {
        const OutcomePair p = samplePair(model, alpha, beta, gen);
        if (p.a == p.b) {
            ++equal;
        }
    }
    if (equal == n_trials) {
        return SequenceRelation::Identical;
    }
    if (equal == 0) {
        return SequenceRelation::Negated;
    }
    return SequenceRelation::Neither;
}

std::string relationName(SequenceRelation rel) {
    switch (rel) {
    case SequenceRelation::Identical:
        return "identical";
    case SequenceRelation::Negated:
        return "negated";
    case SequenceRelation::Neither:
        return "neither";
    }
    return "unknown";
}

} // namespace bellsim

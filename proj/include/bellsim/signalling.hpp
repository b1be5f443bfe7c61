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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellsim/models.hpp"
#include "bellsim/rng.hpp"

namespace bellsim {

/// Single-side outcome statistics at one setting. With +-1 outcomes of mean
/// near zero the standard error is 1/sqrt(n_trials).
struct MarginalReport {
    std::string setting_label;
    double empirical_mean_a;
    double empirical_mean_b;
    std::int64_t n_trials;
    double standard_error;
};

/// Samples n_trials pairs at each beta in the grid with alpha held fixed and
/// records A's marginal mean. Setting-independence of the A marginals is the
/// testable content of the no-signalling claim. Each grid point uses its own
/// substream of gen, so points are independent and parallelizable.
std::vector<MarginalReport>
marginalScan(const CorrelationModel &model, const Eigen::Vector2d &alpha_fixed,
             const std::vector<Eigen::Vector2d> &beta_grid,
             std::int64_t n_trials, SeededGenerator &gen);

enum class SequenceRelation { Identical, Negated, Neither };

/// Relation between the two observers' outcome sequences over n_trials at
/// relative angle theta: Identical when every pair agrees, Negated when every
/// pair disagrees, Neither otherwise. For the strong model this is Identical
/// for theta > pi/2 and Negated for theta < pi/2, deterministically.
SequenceRelation sequenceRelation(const CorrelationModel &model, Angle theta,
                                  std::int64_t n_trials, SeededGenerator &gen);

std::string relationName(SequenceRelation rel);

} // namespace bellsim

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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bellsim/samplers.hpp"

namespace bellsim {

/// Four equal-length lists of +-1 results, one per measurement direction.
struct FourLists {
    std::vector<int> alpha_prime;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> beta_prime;

    std::int64_t size() const {
        return static_cast<std::int64_t>(alpha.size());
    }
    /// Throws std::invalid_argument on length mismatch, empty lists, or
    /// entries other than +-1.
    void validate() const;

    /// Extracts the four lists from classical trial records taken at the
    /// canonical setting order (a',b), (a,b), (a,b'), (a',b'), checking that
    /// the shared-direction outcomes agree across settings.
    static FourLists fromRecords(const std::vector<TrialRecord> &records);
};

/// Number of differing entries |{i : x_i != y_i}|.
std::int64_t countDifferences(std::span<const int> x, std::span<const int> y);

/// Differing-sign counts for the four list pairs and their complements
/// u = N - n.
struct CountSummary {
    std::int64_t n_ap_b = 0;
    std::int64_t n_a_b = 0;
    std::int64_t n_a_bp = 0;
    std::int64_t n_ap_bp = 0;
    std::int64_t total = 0;

    std::int64_t u_ap_b() const { return total - n_ap_b; }
    std::int64_t u_a_b() const { return total - n_a_b; }
    std::int64_t u_a_bp() const { return total - n_a_bp; }
    std::int64_t u_ap_bp() const { return total - n_ap_bp; }

    static CountSummary fromLists(const FourLists &lists);
};

/// Result of the sign-change path inequality
/// n(a',b) + n(a,b) + n(a,b') >= n(a',b'), checked for both the
/// differing-sign counts n and the equal-sign counts u.
struct InequalityCheck {
    bool holds_n;
    std::int64_t slack_n; // lhs - rhs
    bool holds_u;
    std::int64_t slack_u;

    bool holds() const { return holds_n && holds_u; }
};

InequalityCheck checkCountInequality(const CountSummary &counts);

/// Empirical expectation 1 - 2n/N, identical to the direct product mean
/// (1/N) sum x_i y_i by the integer identity sum x_i y_i = N - 2n.
double estimateExpectation(std::span<const int> x, std::span<const int> y);

/// Signed combination E(a',b) + E(a,b) + E(a,b') - E(a',b'). Bounded by 2
/// for local hidden variables, 2*sqrt(2) quantum mechanically, 4 algebraically.
double chsh(double e_ap_b, double e_a_b, double e_a_bp, double e_ap_bp);

/// The 16 deterministic local strategies (r_a', r_a, r_b, r_b') in {+-1}^4,
/// one column per strategy, rows = (a'b, ab, ab', a'b') correlations.
Eigen::Matrix<double, 4, 16> deterministicStrategyVertices();

struct ViolatedFacet {
    /// Signs applied to (e_ap_b, e_a_b, e_a_bp, e_ap_bp); the facet reads
    /// sum_i signs[i]*e_i <= 2.
    std::array<int, 4> signs;
    double value;
};

struct FeasibilityVerdict {
    bool feasible;
    /// Mixing weights over the 16 deterministic strategies (>= 0, sum 1,
    /// reproducing the inputs) when feasible.
    std::optional<Eigen::VectorXd> witness;
    /// Maximally violated facet (ties broken lexicographically) when not.
    std::optional<ViolatedFacet> violated_facet;
};

/// Decides by linear feasibility over the 16 strategy vertices whether the
/// correlation quadruple lies in the local polytope.
FeasibilityVerdict lhvFeasibility(const std::array<double, 4> &e,
                                  double tolerance = 1e-9);

/// Independent facet route: all 8 sign patterns of the CHSH combination stay
/// within 2 + tolerance. Equivalent to lhvFeasibility for inputs in [-1,1]^4.
bool chshFacetBoundSatisfied(const std::array<double, 4> &e,
                             double tolerance = 1e-9);

struct FourListResult {
    CountSummary counts;
    InequalityCheck inequality;
    std::array<double, 4> expectations; // (a'b, ab, ab', a'b')
    double chsh_score;
};

/// Full analysis of a classical run at the canonical settings: builds the
/// four lists, computes counts, checks the count inequality, and evaluates
/// the CHSH combination.
FourListResult runFourListExperiment(const std::vector<TrialRecord> &records);

} // namespace bellsim

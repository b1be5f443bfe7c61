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
#include "bellsim/list_experiment.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace bellsim {

namespace {

void requirePlusMinusOne(const std::vector<int> &list) {
    for (int v : list) {
        if (v != 1 && v != -1) {
            throw std::invalid_argument("list entries must be +-1");
        }
    }
}

void requireExpectation(double e) {
    if (!(e >= -1.0 && e <= 1.0)) {
        throw std::domain_error("expectation value must lie in [-1, 1]");
    }
}

// Phase-1 simplex with Bland's rule: returns x >= 0 with A x = b when the
// system is feasible (artificial objective at most feas_tol), nullopt
// otherwise. Dimensions here are tiny (5 x 16), so a dense tableau is fine.
std::optional<Eigen::VectorXd> solveEqualityFeasibility(Eigen::MatrixXd A,
                                                        Eigen::VectorXd b,
                                                        double feas_tol) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    constexpr double eps = 1e-11;

    for (int i = 0; i < m; ++i) {
        if (b(i) < 0.0) {
            A.row(i) = -A.row(i);
            b(i) = -b(i);
        }
    }

    // Columns 0..n-1: original variables; n..n+m-1: artificials.
    Eigen::MatrixXd T(m, n + m);
    T.leftCols(n) = A;
    T.rightCols(m) = Eigen::MatrixXd::Identity(m, m);
    Eigen::VectorXd rhs = b;

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        basis[i] = n + i;
    }

    // Reduced costs for min(sum of artificials), priced out over the basis.
    Eigen::VectorXd cbar = Eigen::VectorXd::Zero(n + m);
    for (int j = 0; j < n; ++j) {
        cbar(j) = -T.col(j).sum();
    }

    const int max_iters = 200 * (n + m);
    for (int iter = 0; iter < max_iters; ++iter) {
        int entering = -1;
        for (int j = 0; j < n + m; ++j) {
            if (cbar(j) < -eps) {
                entering = j;
                break;
            }
        }
        if (entering < 0) {
            break;
        }

        int leaving = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (T(i, entering) > eps) {
                const double ratio = rhs(i) / T(i, entering);
                if (ratio < best_ratio - eps ||
                    (ratio < best_ratio + eps &&
                     (leaving < 0 || basis[i] < basis[leaving]))) {
                    best_ratio = ratio;
                    leaving = i;
                }
            }
        }
        if (leaving < 0) {
            return std::nullopt; // unbounded; cannot occur for phase 1
        }

        const double pivot = T(leaving, entering);
        T.row(leaving) /= pivot;
        rhs(leaving) /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i != leaving && std::abs(T(i, entering)) > 0.0) {
                const double f = T(i, entering);
                T.row(i) -= f * T.row(leaving);
                rhs(i) -= f * rhs(leaving);
            }
        }
        const double fc = cbar(entering);
        cbar -= fc * T.row(leaving).transpose();
        basis[leaving] = entering;
    }

    double objective = 0.0; // residual mass left on artificial variables
    for (int i = 0; i < m; ++i) {
        if (basis[i] >= n) {
            objective += rhs(i);
        }
    }
    if (objective > feas_tol) {
        return std::nullopt;
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x(basis[i]) = std::max(rhs(i), 0.0);
        }
    }
    return x;
}

// The 8 CHSH sign patterns: signs in {+-1}^4 with product -1, enumerated
// lexicographically with +1 ordered before -1.
std::vector<std::array<int, 4>> chshSignPatterns() {
    std::vector<std::array<int, 4>> patterns;
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> s;
        int product = 1;
        for (int k = 0; k < 4; ++k) {
            s[k] = (mask >> (3 - k)) & 1 ? -1 : 1;
            product *= s[k];
        }
        if (product == -1) {
            patterns.push_back(s);
        }
    }
    return patterns;
}

ViolatedFacet maxFacet(const std::array<double, 4> &e) {
    ViolatedFacet best{{1, 1, 1, 1}, -std::numeric_limits<double>::infinity()};
    for (const auto &s : chshSignPatterns()) {
        double value = 0.0;
        for (int k = 0; k < 4; ++k) {
            value += s[k] * e[k];
        }
        if (value > best.value) { // strict: first pattern wins ties
            best = {s, value};
        }
    }
    return best;
}

} // namespace

void FourLists::validate() const {
    const std::size_t n = alpha.size();
    if (n == 0) {
        throw std::invalid_argument("lists must be nonempty");
    }
    if (alpha_prime.size() != n || beta.size() != n ||
        beta_prime.size() != n) {
        throw std::invalid_argument("the four lists must have equal length");
    }
    requirePlusMinusOne(alpha_prime);
    requirePlusMinusOne(alpha);
    requirePlusMinusOne(beta);
    requirePlusMinusOne(beta_prime);
}

FourLists FourLists::fromRecords(const std::vector<TrialRecord> &records) {
    if (records.empty()) {
        throw std::invalid_argument("no trial records");
    }
    FourLists lists;
    lists.alpha_prime.reserve(records.size());
    lists.alpha.reserve(records.size());
    lists.beta.reserve(records.size());
    lists.beta_prime.reserve(records.size());
    for (const auto &rec : records) {
        if (rec.outcomes.size() != 4) {
            throw std::invalid_argument(
                "four-list analysis needs records with all four outcomes");
        }
        const auto &o = rec.outcomes; // (a',b), (a,b), (a,b'), (a',b')
        if (o[0].b != o[1].b || o[1].a != o[2].a || o[0].a != o[3].a ||
            o[2].b != o[3].b) {
            throw std::invalid_argument(
                "record outcomes are not consistent across shared directions");
        }
        lists.alpha_prime.push_back(o[0].a);
        lists.alpha.push_back(o[1].a);
        lists.beta.push_back(o[1].b);
        lists.beta_prime.push_back(o[2].b);
    }
    lists.validate();
    return lists;
}

std::int64_t countDifferences(std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("lists must have equal length");
    }
    std::int64_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
            ++n;
        }
    }
    return n;
}

CountSummary CountSummary::fromLists(const FourLists &lists) {
    lists.validate();
    CountSummary c;
    c.total = lists.size();
    c.n_ap_b = countDifferences(lists.alpha_prime, lists.beta);
    c.n_a_b = countDifferences(lists.alpha, lists.beta);
    c.n_a_bp = countDifferences(lists.alpha, lists.beta_prime);
    c.n_ap_bp = countDifferences(lists.alpha_prime, lists.beta_prime);
    return c;
}

InequalityCheck checkCountInequality(const CountSummary &c) {
    InequalityCheck r{};
    r.slack_n = c.n_ap_b + c.n_a_b + c.n_a_bp - c.n_ap_bp;
    r.holds_n = r.slack_n >= 0;
    r.slack_u = c.u_ap_b() + c.u_a_b() + c.u_a_bp() - c.u_ap_bp();
    r.holds_u = r.slack_u >= 0;
    return r;
}

double estimateExpectation(std::span<const int> x, std::span<const int> y) {
    if (x.empty()) {
        throw std::invalid_argument("lists must be nonempty");
    }
    const std::int64_t n = countDifferences(x, y);
    const std::int64_t total = static_cast<std::int64_t>(x.size());
    // sum x_i y_i = N - 2n exactly, so 1 - 2n/N and the product mean coincide.
    return static_cast<double>(total - 2 * n) / static_cast<double>(total);
}

double chsh(double e_ap_b, double e_a_b, double e_a_bp, double e_ap_bp) {
    requireExpectation(e_ap_b);
    requireExpectation(e_a_b);
    requireExpectation(e_a_bp);
    requireExpectation(e_ap_bp);
    return e_ap_b + e_a_b + e_a_bp - e_ap_bp;
}

Eigen::Matrix<double, 4, 16> deterministicStrategyVertices() {
    Eigen::Matrix<double, 4, 16> v;
    int col = 0;
    for (int ap = -1; ap <= 1; ap += 2) {
        for (int a = -1; a <= 1; a += 2) {
            for (int b = -1; b <= 1; b += 2) {
                for (int bp = -1; bp <= 1; bp += 2) {
                    v(0, col) = ap * b;
                    v(1, col) = a * b;
                    v(2, col) = a * bp;
                    v(3, col) = ap * bp;
                    ++col;
                }
            }
        }
    }
    return v;
}

bool chshFacetBoundSatisfied(const std::array<double, 4> &e,
                             double tolerance) {
    if (tolerance < 0.0) {
        throw std::invalid_argument("tolerance must be >= 0");
    }
    for (double v : e) {
        requireExpectation(v);
    }
    return maxFacet(e).value <= 2.0 + tolerance;
}

FeasibilityVerdict lhvFeasibility(const std::array<double, 4> &e,
                                  double tolerance) {
    if (tolerance < 0.0) {
        throw std::invalid_argument("tolerance must be >= 0");
    }
    for (double v : e) {
        requireExpectation(v);
    }

    Eigen::MatrixXd A(5, 16);
    A.topRows(4) = deterministicStrategyVertices();
    A.row(4) = Eigen::RowVectorXd::Ones(16);
    Eigen::VectorXd b(5);
    b << e[0], e[1], e[2], e[3], 1.0;

    FeasibilityVerdict verdict;
    auto weights = solveEqualityFeasibility(A, b, tolerance + 1e-11);
    verdict.feasible = weights.has_value();
    if (weights) {
        verdict.witness = std::move(*weights);
    } else {
        verdict.violated_facet = maxFacet(e);
    }
    return verdict;
}

FourListResult
runFourListExperiment(const std::vector<TrialRecord> &records) {
    const FourLists lists = FourLists::fromRecords(records);
    FourListResult result;
    result.counts = CountSummary::fromLists(lists);
    result.inequality = checkCountInequality(result.counts);
    result.expectations = {
        estimateExpectation(lists.alpha_prime, lists.beta),
        estimateExpectation(lists.alpha, lists.beta),
        estimateExpectation(lists.alpha, lists.beta_prime),
        estimateExpectation(lists.alpha_prime, lists.beta_prime)};
    result.chsh_score =
        chsh(result.expectations[0], result.expectations[1],
             result.expectations[2], result.expectations[3]);
    return result;
}

} // namespace bellsim

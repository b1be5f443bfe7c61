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
//
// Acceptance suite: one pass/fail line per criterion. Every tolerance is
// pinned here. Takes the CLI binary path as argv[1] for the reproducibility
// criterion.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bellsim/list_experiment.hpp"
#include "bellsim/models.hpp"
#include "bellsim/samplers.hpp"
#include "bellsim/signalling.hpp"
#include "bellsim/spin_singlet.hpp"

using namespace bellsim;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kMcTrials = 1000000;

int failures = 0;

void report(int criterion, const std::string &description, bool pass,
            const std::string &detail = "") {
    std::printf("%s  %2d. %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
                description.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!pass) {
        ++failures;
    }
}

std::array<double, 4> analyticQuadruple(const CorrelationModel &model) {
    const auto settings = canonicalSettings(DirectionConfig{});
    std::array<double, 4> e{};
    for (int k = 0; k < 4; ++k) {
        e[k] = model.evaluate(
            Angle::between(settings[k].alpha, settings[k].beta));
    }
    return e;
}

// 1. Analytic CHSH hierarchy at the maximal-violation angles.
void criterion1() {
    const auto ec = analyticQuadruple(CorrelationModel::classical());
    const auto eq = analyticQuadruple(CorrelationModel::quantum());
    const auto es = analyticQuadruple(CorrelationModel::strong());
    const double sc = std::abs(chsh(ec[0], ec[1], ec[2], ec[3]));
    const double sq = std::abs(chsh(eq[0], eq[1], eq[2], eq[3]));
    const double ss = std::abs(chsh(es[0], es[1], es[2], es[3]));
    const bool pass = sc == 2.0 &&
                      std::abs(sq - 2.0 * std::sqrt(2.0)) < 1e-12 &&
                      ss == 4.0;
    std::ostringstream detail;
    detail << "classical=" << sc << " quantum=" << sq << " strong=" << ss;
    report(1, "analytic CHSH hierarchy: 2, 2*sqrt(2), 4", pass, detail.str());
}

// 2. Monte Carlo CHSH hierarchy, 10^6 trials per setting pair.
void criterion2() {
    const auto settings = canonicalSettings(DirectionConfig{});
    bool pass = true;
    std::ostringstream detail;
    int model_index = 0;
    for (const auto &model :
         {CorrelationModel::classical(), CorrelationModel::quantum(),
          CorrelationModel::strong()}) {
        SeededGenerator gen(2026, static_cast<std::uint64_t>(model_index));
        const auto records = runSeries(model, settings, kMcTrials, gen);
        std::array<double, 4> e{};
        double var_sum = 0.0;
        for (int k = 0; k < 4; ++k) {
            std::int64_t sum = 0;
            for (const auto &rec : records) {
                sum += rec.outcomes[k].a * rec.outcomes[k].b;
            }
            e[k] = static_cast<double>(sum) / kMcTrials;
            var_sum += std::max(0.0, 1.0 - e[k] * e[k]) / kMcTrials;
        }
        const double s = std::abs(chsh(e[0], e[1], e[2], e[3]));
        const auto analytic = analyticQuadruple(model);
        const double s_analytic = std::abs(
            chsh(analytic[0], analytic[1], analytic[2], analytic[3]));
        const double margin = 4.0 * std::sqrt(var_sum);
        if (model.kind() == CorrelationModel::Kind::Strong) {
            pass = pass && s == 4.0;
        } else {
            pass = pass && std::abs(s - s_analytic) < margin;
        }
        detail << model.name() << "=" << s << " ";
        ++model_index;
    }
    report(2, "Monte Carlo CHSH hierarchy within 4 combined SE", pass,
           detail.str());
}

// 3. LHV sampler reproduces E(theta) = 2*theta/pi - 1 on a 19-point grid.
void criterion3() {
    const double margin = 4.0 / std::sqrt(static_cast<double>(kMcTrials));
    bool pass = true;
    double worst = 0.0;
    for (int g = 1; g <= 19; ++g) {
        const double theta = kPi * g / 20.0;
        SeededGenerator gen(3, static_cast<std::uint64_t>(g));
        const Eigen::Vector2d alpha = unitFromPolar(0.0);
        const Eigen::Vector2d beta = unitFromPolar(theta);
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < kMcTrials; ++i) {
            const OutcomePair p = sampleLhv(alpha, beta, gen);
            sum += p.a * p.b;
        }
        const double e = static_cast<double>(sum) / kMcTrials;
        const double dev = std::abs(e - (2.0 * theta / kPi - 1.0));
        worst = std::max(worst, dev);
        pass = pass && dev < margin;
    }
    std::ostringstream detail;
    detail << "max |dev| = " << worst << " (margin " << margin << ")";
    report(3, "LHV closed form on 19-point grid, N=10^6", pass, detail.str());
}

// 4. Count inequality: random four-lists and classical Monte Carlo runs.
void criterion4() {
    std::mt19937_64 rng(4);
    bool pass = true;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        FourLists lists;
        for (auto *list : {&lists.alpha_prime, &lists.alpha, &lists.beta,
                           &lists.beta_prime}) {
            list->resize(n);
            for (auto &v : *list) {
                v = (rng() & 1) ? 1 : -1;
            }
        }
        const auto check =
            checkCountInequality(CountSummary::fromLists(lists));
        pass = pass && check.holds_n && check.holds_u;
    }
    const auto settings = canonicalSettings(DirectionConfig{});
    for (int run = 0; run < 20; ++run) {
        SeededGenerator gen(40 + run);
        const auto records =
            runSeries(CorrelationModel::classical(), settings, 5000, gen);
        const auto result = runFourListExperiment(records);
        pass = pass && result.inequality.holds();
    }
    report(4, "count inequality: 10^4 random four-lists + classical runs",
           pass);
}

// 5. Vertex-enumeration feasibility agrees with the 8-facet criterion.
void criterion5() {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    bool pass = true;
    for (int i = 0; i < 10000; ++i) {
        const std::array<double, 4> e = {unit(rng), unit(rng), unit(rng),
                                         unit(rng)};
        if (lhvFeasibility(e).feasible != chshFacetBoundSatisfied(e)) {
            pass = false;
            break;
        }
    }
    const auto contradiction = lhvFeasibility({-1.0, -1.0, -1.0, 1.0});
    pass = pass && !contradiction.feasible;
    pass = pass && contradiction.violated_facet &&
           std::abs(contradiction.violated_facet->value - 4.0) < 1e-12;
    const auto vertices = deterministicStrategyVertices();
    for (int col = 0; col < 16; ++col) {
        const std::array<double, 4> e = {vertices(0, col), vertices(1, col),
                                         vertices(2, col), vertices(3, col)};
        pass = pass && lhvFeasibility(e).feasible;
    }
    report(5, "feasibility oracle equivalence on 10^4 quadruples", pass);
}

// 6. Spin-j singlet: matrix contraction vs closed form, 50 theta values.
void criterion6() {
    bool pass = true;
    double worst = 0.0;
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) {
        grid.push_back(kPi * i / 49.0);
    }
    std::vector<std::vector<double>> normalized;
    for (int tj : {1, 2, 3, 4, 5}) {
        const auto j = HalfInteger::fromTwice(tj);
        const SingletCorrelator correlator(j);
        const Eigen::Vector3d alpha(0, 0, 1);
        std::vector<double> curve;
        for (double theta : grid) {
            const Eigen::Vector3d beta(std::sin(theta), 0.0, std::cos(theta));
            const double c = correlator.correlation(alpha, beta);
            const double closed =
                spinCorrelationClosedForm(j, Angle(std::min(theta, kPi)));
            worst = std::max(worst, std::abs(c - closed));
            pass = pass && std::abs(c - closed) < 1e-10;
            curve.push_back((3.0 / j.casimir()) * c);
        }
        normalized.push_back(std::move(curve));
        pass = pass && sumTwiceMSquared(j) == sumTwiceMSquaredClosedForm(j);
    }
    for (std::size_t k = 1; k < normalized.size(); ++k) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            pass = pass &&
                   std::abs(normalized[k][i] - normalized[0][i]) < 1e-10;
        }
    }
    std::ostringstream detail;
    detail << "max |matrix - closed| = " << worst;
    report(6, "spin-j singlet operator algebra vs closed form", pass,
           detail.str());
}

// 7. Conversion round trip and E_s = sgn(E).
void criterion7() {
    bool pass = true;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double e = -1.0 + 2.0 * i / 9999.0;
        const double back = quantumToClassical(classicalToQuantum(e));
        worst = std::max(worst, std::abs(back - e));
    }
    pass = pass && worst < 1e-12;
    for (int i = 0; i < 10000; ++i) {
        const Angle theta(kPi * i / 9999.0);
        const double ec = evalClassical(theta);
        const double sgn_ec = ec < 0.0 ? -1.0 : (ec > 0.0 ? 1.0 : 0.0);
        pass = pass && evalStrong(theta) == sgn_ec;
    }
    std::ostringstream detail;
    detail << "max round-trip error = " << worst;
    report(7, "conversion round trip < 1e-12; E_s = sgn(E) exact", pass,
           detail.str());
}

// 8. Quasi-quantum weighting of 10^6 LHV trials converges to -cos(theta).
void criterion8() {
    bool pass = true;
    std::ostringstream detail;
    const double margin =
        4.0 * (kPi / 2.0) / std::sqrt(static_cast<double>(kMcTrials));
    int point = 0;
    for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 3.0}) {
        SeededGenerator gen(8, static_cast<std::uint64_t>(point++));
        const Eigen::Vector2d alpha = unitFromPolar(0.0);
        const Eigen::Vector2d beta = unitFromPolar(theta);
        std::vector<double> products;
        products.reserve(kMcTrials);
        for (std::int64_t i = 0; i < kMcTrials; ++i) {
            const OutcomePair p = sampleLhv(alpha, beta, gen);
            products.push_back(static_cast<double>(p.a * p.b) / kMcTrials);
        }
        const double e_qqm = evalQuasiQuantum(products);
        const double dev = std::abs(e_qqm + std::cos(theta));
        pass = pass && dev < margin;
        detail << "dev=" << dev << " ";
    }
    detail << "(margin " << margin << ")";
    report(8, "quasi-quantum convergence at theta in {pi/6, pi/4, pi/3}",
           pass, detail.str());
}

// 9. Fourier series: form agreement and order-10^4 convergence.
void criterion9() {
    bool pass = true;
    for (double x = -3.1; x < 3.15; x += 0.1) {
        if (std::abs(x) < 1e-9) {
            continue;
        }
        const double diff =
            std::abs(fourierSgnPartialSum(x, 10000, SgnSeriesForm::Sine) -
                     fourierSgnPartialSum(x, 10000, SgnSeriesForm::Cosine));
        pass = pass && diff < 1e-12;
    }
    // The square wave jumps at 0 and +-pi; pointwise convergence holds away
    // from both, so the grid keeps a 0.1 margin at each end.
    double worst = 0.0;
    for (double x = 0.1; x < kPi - 0.1 + 1e-9; x += 0.02) {
        for (double sx : {x, -x}) {
            const double target = sx > 0.0 ? 1.0 : -1.0;
            worst = std::max(
                worst,
                std::abs(fourierSgnPartialSum(sx, 10000,
                                              SgnSeriesForm::Sine) -
                         target));
        }
    }
    pass = pass && worst < 1e-3;
    std::ostringstream detail;
    detail << "max |partial sum - sgn| on |x|>=0.1: " << worst;
    report(9, "sgn Fourier series: forms agree; order-10^4 within 1e-3",
           pass, detail.str());
}

// 10. No-signalling: marginal uniformity and deterministic sequence
// relations.
void criterion10() {
    bool pass = true;
    const Eigen::Vector2d alpha = unitFromPolar(0.0);
    std::vector<Eigen::Vector2d> grid;
    for (int i = 0; i < 5; ++i) {
        grid.push_back(unitFromPolar(kPi * i / 4.0));
    }
    const std::vector<CorrelationModel> models = {
        CorrelationModel::classical(), CorrelationModel::quantum(),
        CorrelationModel::strong(),
        CorrelationModel::noisy(CorrelationModel::classical(), 0.5),
        CorrelationModel::quasiQuantum()};
    for (std::size_t m = 0; m < models.size(); ++m) {
        SeededGenerator gen(10, m);
        const auto reports =
            marginalScan(models[m], alpha, grid, kMcTrials, gen);
        for (const auto &r : reports) {
            pass = pass &&
                   std::abs(r.empirical_mean_a) < 4.0 * r.standard_error;
        }
    }
    SeededGenerator gen_hi(10, 100);
    SeededGenerator gen_lo(10, 101);
    pass = pass && sequenceRelation(CorrelationModel::strong(),
                                    Angle(3.0 * kPi / 4.0), 100000,
                                    gen_hi) == SequenceRelation::Identical;
    pass = pass && sequenceRelation(CorrelationModel::strong(),
                                    Angle(kPi / 4.0), 100000,
                                    gen_lo) == SequenceRelation::Negated;
    report(10, "no-signalling marginals at 4 SE; strong sequence relations",
           pass);
}

// 11. CLI reproducibility: byte-identical outputs across two runs.
void criterion11(const char *cli_path) {
    if (cli_path == nullptr) {
        report(11, "CLI reproducibility", false, "CLI path not provided");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / "bellsim_acceptance";
    fs::create_directories(dir);

    const std::vector<std::string> commands = {
        "curves --grid 181",
        "curves --eta 0.25 --format json",
        "chsh --model quantum --trials 20000 --seed 7 --format json",
        "chsh --model strong --trials 20000 --seed 7",
        "spin --j 1.5 --grid 25",
        "fourlists --model classical --trials 20000 --seed 9 --format json",
        "fourlists --model strong --format json",
        "signalling --model strong --trials 20000 --seed 3 --format json",
        "feasibility --quad -0.7,-0.7,-0.7,0.7 --format json",
    };
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        std::array<std::string, 2> outputs;
        for (int run = 0; run < 2; ++run) {
            const fs::path out =
                dir / ("cmd" + std::to_string(c) + "_run" +
                       std::to_string(run) + ".txt");
            const std::string cmdline = std::string("\"") + cli_path +
                                        "\" " + commands[c] + " > \"" +
                                        out.string() + "\"";
            if (std::system(cmdline.c_str()) != 0) {
                pass = false;
                detail << "command failed: " << commands[c] << " ";
                break;
            }
            std::ifstream in(out, std::ios::binary);
            std::ostringstream content;
            content << in.rdbuf();
            outputs[run] = content.str();
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) {
            pass = false;
            detail << "mismatch: " << commands[c] << " ";
        }
    }
    report(11, "CLI reproducibility: byte-identical output under fixed seed",
           pass, detail.str());
}

} // namespace

int main(int argc, char **argv) {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11(argc > 1 ? argv[1] : nullptr);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

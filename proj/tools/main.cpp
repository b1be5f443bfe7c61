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
// bellsim: simulation and analysis of two-party dichotomic correlation
// experiments. Subcommands: curves, chsh, spin, fourlists, signalling,
// feasibility.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bellsim/list_experiment.hpp"
#include "bellsim/models.hpp"
#include "bellsim/samplers.hpp"
#include "bellsim/serialize.hpp"
#include "bellsim/signalling.hpp"
#include "bellsim/spin_singlet.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model = "classical";
    double j = 0.5;
    double eta = 0.0;
    bool eta_given = false;
    // Polar angles alpha', alpha, beta, beta'.
    std::vector<double> angles = {0.0, kPi / 2.0, kPi / 4.0, 3.0 * kPi / 4.0};
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
    int grid = 181;
    double tolerance = 1e-9;
    std::vector<double> quad;
};

bellsim::CorrelationModel makeModel(const RunConfig &cfg) {
    using bellsim::CorrelationModel;
    if (cfg.model == "classical") {
        return CorrelationModel::classical();
    }
    if (cfg.model == "quantum") {
        return CorrelationModel::quantum();
    }
    if (cfg.model == "strong") {
        return CorrelationModel::strong();
    }
    if (cfg.model == "spin-j") {
        return CorrelationModel::spinJ(bellsim::HalfInteger::fromDouble(cfg.j));
    }
    if (cfg.model == "noisy") {
        return CorrelationModel::noisy(CorrelationModel::classical(), cfg.eta);
    }
    if (cfg.model == "quasi-quantum") {
        return CorrelationModel::quasiQuantum();
    }
    throw std::domain_error("unknown model: " + cfg.model);
}

bellsim::DirectionConfig directionsOf(const RunConfig &cfg) {
    if (cfg.angles.size() != 4) {
        throw std::domain_error("--angles needs four values: ap,a,b,bp");
    }
    return {cfg.angles[0], cfg.angles[1], cfg.angles[2], cfg.angles[3]};
}

void writeOutput(const RunConfig &cfg, const std::string &content) {
    if (cfg.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw IoError("cannot open output file: " + cfg.out);
    }
    file << content;
    if (!file) {
        throw IoError("failed writing output file: " + cfg.out);
    }
}

std::string renderReport(const RunConfig &cfg, const bellsim::Json &report) {
    if (cfg.format == "json") {
        return report.dump(2) + "\n";
    }
    // Flat key,value CSV for report-style results.
    std::ostringstream os;
    os << "key,value\n";
    const std::function<void(const std::string &, const bellsim::Json &)>
        walk = [&](const std::string &prefix, const bellsim::Json &node) {
            if (node.is_object()) {
                for (const auto &[k, v] : node.items()) {
                    walk(prefix.empty() ? k : prefix + "." + k, v);
                }
            } else if (node.is_array()) {
                for (std::size_t i = 0; i < node.size(); ++i) {
                    walk(prefix + "[" + std::to_string(i) + "]", node[i]);
                }
            } else if (node.is_number_float()) {
                os << prefix << ',' << bellsim::formatDouble(node.get<double>())
                   << '\n';
            } else {
                os << prefix << ',' << node.dump() << '\n';
            }
        };
    walk("", report);
    return os.str();
}

// ---------------------------------------------------------------- curves

int cmdCurves(const RunConfig &cfg) {
    if (cfg.grid < 2) {
        throw std::domain_error("--grid must be >= 2");
    }
    std::vector<bellsim::Json> rows;
    for (int i = 0; i < cfg.grid; ++i) {
        const double theta = kPi * i / (cfg.grid - 1);
        const bellsim::Angle a(std::min(theta, kPi));
        bellsim::Json row;
        row["theta"] = theta;
        row["classical"] = bellsim::evalClassical(a);
        row["quantum"] = bellsim::evalQuantum(a);
        row["strong"] = bellsim::evalStrong(a);
        if (cfg.eta_given) {
            row["noisy"] = bellsim::evalNoisy(
                bellsim::CorrelationModel::classical(), cfg.eta, a);
        }
        rows.push_back(std::move(row));
    }

    if (cfg.format == "json") {
        bellsim::Json report;
        report["curves"] = rows;
        writeOutput(cfg, report.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "theta,classical,quantum,strong";
    if (cfg.eta_given) {
        os << ",noisy";
    }
    os << '\n';
    for (const auto &row : rows) {
        os << bellsim::formatDouble(row["theta"].get<double>()) << ','
           << bellsim::formatDouble(row["classical"].get<double>()) << ','
           << bellsim::formatDouble(row["quantum"].get<double>()) << ','
           << bellsim::formatDouble(row["strong"].get<double>());
        if (cfg.eta_given) {
            os << ',' << bellsim::formatDouble(row["noisy"].get<double>());
        }
        os << '\n';
    }
    writeOutput(cfg, os.str());
    return 0;
}

// ------------------------------------------------------------------ chsh

int cmdChsh(const RunConfig &cfg) {
    const auto model = makeModel(cfg);
    const auto dirs = directionsOf(cfg);
    const auto settings = bellsim::canonicalSettings(dirs);

    std::array<double, 4> analytic{};
    for (int k = 0; k < 4; ++k) {
        analytic[k] = model.evaluate(
            bellsim::Angle::between(settings[k].alpha, settings[k].beta));
    }
    const double s_analytic =
        bellsim::chsh(analytic[0], analytic[1], analytic[2], analytic[3]);

    bellsim::SeededGenerator gen(cfg.seed);
    const auto records = bellsim::runSeries(model, settings, cfg.trials, gen);
    std::array<double, 4> empirical{};
    std::array<double, 4> se{};
    for (int k = 0; k < 4; ++k) {
        std::int64_t sum = 0;
        for (const auto &rec : records) {
            sum += rec.outcomes[k].a * rec.outcomes[k].b;
        }
        const double n = static_cast<double>(cfg.trials);
        empirical[k] = static_cast<double>(sum) / n;
        se[k] = std::sqrt(std::max(0.0, 1.0 - empirical[k] * empirical[k]) / n);
    }
    const double s_empirical =
        bellsim::chsh(empirical[0], empirical[1], empirical[2], empirical[3]);
    const double s_se = std::sqrt(se[0] * se[0] + se[1] * se[1] +
                                  se[2] * se[2] + se[3] * se[3]);

    const auto verdict = bellsim::lhvFeasibility(analytic, cfg.tolerance);

    bellsim::Json report;
    report["model"] = model.name();
    report["n_trials"] = cfg.trials;
    report["seed"] = cfg.seed;
    bellsim::Json pairs = bellsim::Json::array();
    for (int k = 0; k < 4; ++k) {
        const double theta =
            bellsim::Angle::between(settings[k].alpha, settings[k].beta)
                .radians();
        pairs.push_back({{"label", settings[k].label},
                         {"theta", theta},
                         {"analytic_e", analytic[k]},
                         {"empirical_e", empirical[k]},
                         {"standard_error", se[k]}});
    }
    report["pairs"] = std::move(pairs);
    report["chsh_analytic"] = s_analytic;
    report["chsh_empirical"] = s_empirical;
    report["chsh_standard_error"] = s_se;
    report["feasibility"] = bellsim::toJson(verdict);
    writeOutput(cfg, renderReport(cfg, report));
    return 0;
}

// ------------------------------------------------------------------ spin

int cmdSpin(const RunConfig &cfg) {
    const auto j = bellsim::HalfInteger::fromDouble(cfg.j);
    if (cfg.grid < 2) {
        throw std::domain_error("--grid must be >= 2");
    }
    const bellsim::SingletCorrelator correlator(j);
    const Eigen::Vector3d alpha(0.0, 0.0, 1.0);

    std::ostringstream csv;
    csv << "theta,c_matrix,c_closed_form,abs_diff\n";
    bellsim::Json rows = bellsim::Json::array();
    double max_dev = 0.0;
    for (int i = 0; i < cfg.grid; ++i) {
        const double theta = kPi * i / (cfg.grid - 1);
        const bellsim::Angle a(std::min(theta, kPi));
        const Eigen::Vector3d beta(std::sin(theta), 0.0, std::cos(theta));
        const double c_matrix = correlator.correlation(alpha, beta);
        const double c_closed = bellsim::spinCorrelationClosedForm(j, a);
        const double diff = std::abs(c_matrix - c_closed);
        max_dev = std::max(max_dev, diff);
        csv << bellsim::formatDouble(theta) << ','
            << bellsim::formatDouble(c_matrix) << ','
            << bellsim::formatDouble(c_closed) << ','
            << bellsim::formatDouble(diff) << '\n';
        rows.push_back({{"theta", theta},
                        {"c_matrix", c_matrix},
                        {"c_closed_form", c_closed},
                        {"abs_diff", diff}});
    }
    csv << "# max_deviation," << bellsim::formatDouble(max_dev) << '\n';

    if (cfg.format == "json") {
        bellsim::Json report;
        report["j"] = j.value();
        report["rows"] = std::move(rows);
        report["max_deviation"] = max_dev;
        writeOutput(cfg, report.dump(2) + "\n");
    } else {
        writeOutput(cfg, csv.str());
    }
    return 0;
}

// ------------------------------------------------------------- fourlists

int cmdFourlists(const RunConfig &cfg) {
    const auto model = makeModel(cfg);
    const auto dirs = directionsOf(cfg);

    if (model.kind() == bellsim::CorrelationModel::Kind::Strong) {
        // No listing of outcomes exists for the strong box; certify the
        // contradiction instead.
        const auto settings = bellsim::canonicalSettings(dirs);
        std::array<double, 4> analytic{};
        for (int k = 0; k < 4; ++k) {
            analytic[k] = model.evaluate(
                bellsim::Angle::between(settings[k].alpha, settings[k].beta));
        }
        const auto verdict = bellsim::lhvFeasibility(analytic, cfg.tolerance);
        bellsim::Json report;
        report["model"] = model.name();
        report["note"] = "no four-list assignment exists for this model";
        report["correlations"] = analytic;
        report["feasibility"] = bellsim::toJson(verdict);
        writeOutput(cfg, renderReport(cfg, report));
        return 0;
    }
    if (model.kind() != bellsim::CorrelationModel::Kind::Classical) {
        throw std::domain_error(
            "four lists require the classical model: a nonclassical "
            "correlation admits no consistent per-trial outcome quadruples");
    }

    const auto settings = bellsim::canonicalSettings(dirs);
    bellsim::SeededGenerator gen(cfg.seed);
    const auto records = bellsim::runSeries(model, settings, cfg.trials, gen);
    const auto result = bellsim::runFourListExperiment(records);

    bellsim::Json report = bellsim::toJson(result);
    report["model"] = model.name();
    report["seed"] = cfg.seed;

    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            throw IoError("cannot open output file: " + cfg.out);
        }
        std::vector<std::string> labels;
        for (const auto &s : settings) {
            labels.push_back(s.label);
        }
        bellsim::writeTrialsCsv(file, records, labels);
        if (!file) {
            throw IoError("failed writing output file: " + cfg.out);
        }
        report["trials_file"] = cfg.out;
    }
    RunConfig stdout_cfg = cfg;
    stdout_cfg.out.clear();
    writeOutput(stdout_cfg, renderReport(cfg, report));
    return 0;
}

// ------------------------------------------------------------ signalling

int cmdSignalling(const RunConfig &cfg) {
    const auto model = makeModel(cfg);
    const Eigen::Vector2d alpha = bellsim::unitFromPolar(0.0);
    std::vector<Eigen::Vector2d> beta_grid;
    std::vector<double> beta_angles = {0.0, kPi / 4.0, kPi / 2.0,
                                       3.0 * kPi / 4.0, kPi};
    for (double phi : beta_angles) {
        beta_grid.push_back(bellsim::unitFromPolar(phi));
    }

    bellsim::SeededGenerator gen(cfg.seed);
    const auto reports =
        bellsim::marginalScan(model, alpha, beta_grid, cfg.trials, gen);

    bellsim::SeededGenerator gen_lo = gen.substream(1001);
    bellsim::SeededGenerator gen_hi = gen.substream(1002);
    const auto rel_lo = bellsim::sequenceRelation(
        model, bellsim::Angle(kPi / 4.0), cfg.trials, gen_lo);
    const auto rel_hi = bellsim::sequenceRelation(
        model, bellsim::Angle(3.0 * kPi / 4.0), cfg.trials, gen_hi);

    bellsim::Json report;
    report["model"] = model.name();
    report["seed"] = cfg.seed;
    bellsim::Json marginals = bellsim::Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        bellsim::Json entry = bellsim::toJson(reports[i]);
        entry["beta_angle"] = beta_angles[i];
        marginals.push_back(std::move(entry));
    }
    report["marginals"] = std::move(marginals);
    report["sequence_relation"] = {
        {"theta_pi_4", bellsim::relationName(rel_lo)},
        {"theta_3pi_4", bellsim::relationName(rel_hi)}};
    writeOutput(cfg, renderReport(cfg, report));
    return 0;
}

// ----------------------------------------------------------- feasibility

int cmdFeasibility(const RunConfig &cfg) {
    std::array<double, 4> e{};
    if (!cfg.quad.empty()) {
        if (cfg.quad.size() != 4) {
            throw std::domain_error("--quad needs four correlation values");
        }
        std::copy(cfg.quad.begin(), cfg.quad.end(), e.begin());
    } else {
        const auto model = makeModel(cfg);
        const auto settings = bellsim::canonicalSettings(directionsOf(cfg));
        for (int k = 0; k < 4; ++k) {
            e[k] = model.evaluate(
                bellsim::Angle::between(settings[k].alpha, settings[k].beta));
        }
    }
    const auto verdict = bellsim::lhvFeasibility(e, cfg.tolerance);
    bellsim::Json report;
    report["correlations"] = e;
    report["tolerance"] = cfg.tolerance;
    report["verdict"] = bellsim::toJson(verdict);
    writeOutput(cfg, renderReport(cfg, report));
    return 0;
}

// ----------------------------------------------------------------- setup

void addCommonOptions(CLI::App *cmd, RunConfig &cfg, std::string &config_path) {
    cmd->add_option("--config", config_path,
                    "JSON config file; flags override its values");
    cmd->add_option("--model", cfg.model,
                    "classical|quantum|strong|spin-j|noisy|quasi-quantum");
    cmd->add_option("--j", cfg.j, "spin for the spin-j model (half-integer)");
    cmd->add_option("--eta", cfg.eta, "noise fraction in [0,1]");
    cmd->add_option("--angles", cfg.angles,
                    "four polar angles ap,a,b,bp in radians")
        ->delimiter(',')
        ->expected(4);
    cmd->add_option("--trials", cfg.trials, "Monte Carlo trials");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--format", cfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
    cmd->add_option("--grid", cfg.grid, "theta grid size");
    cmd->add_option("--tolerance", cfg.tolerance, "feasibility tolerance");
    cmd->add_option("--quad", cfg.quad,
                    "correlation quadruple e_ap_b,e_a_b,e_a_bp,e_ap_bp")
        ->delimiter(',');
}

void applyConfigFile(CLI::App *cmd, RunConfig &cfg,
                     const std::string &config_path) {
    if (config_path.empty()) {
        return;
    }
    std::ifstream file(config_path);
    if (!file) {
        throw IoError("cannot open config file: " + config_path);
    }
    bellsim::Json conf = bellsim::Json::parse(file);
    const auto unset = [&](const std::string &flag) {
        const CLI::Option *opt = cmd->get_option(flag);
        return opt->count() == 0;
    };
    if (conf.contains("model") && unset("--model")) {
        cfg.model = conf["model"].get<std::string>();
    }
    if (conf.contains("j") && unset("--j")) {
        cfg.j = conf["j"].get<double>();
    }
    if (conf.contains("eta") && unset("--eta")) {
        cfg.eta = conf["eta"].get<double>();
        cfg.eta_given = true;
    }
    if (conf.contains("angles") && unset("--angles")) {
        cfg.angles = conf["angles"].get<std::vector<double>>();
    }
    if (conf.contains("trials") && unset("--trials")) {
        cfg.trials = conf["trials"].get<std::int64_t>();
    }
    if (conf.contains("seed") && unset("--seed")) {
        cfg.seed = conf["seed"].get<std::uint64_t>();
    }
    if (conf.contains("format") && unset("--format")) {
        cfg.format = conf["format"].get<std::string>();
    }
    if (conf.contains("out") && unset("--out")) {
        cfg.out = conf["out"].get<std::string>();
    }
    if (conf.contains("grid") && unset("--grid")) {
        cfg.grid = conf["grid"].get<int>();
    }
    if (conf.contains("tolerance") && unset("--tolerance")) {
        cfg.tolerance = conf["tolerance"].get<double>();
    }
    if (conf.contains("quad") && unset("--quad")) {
        cfg.quad = conf["quad"].get<std::vector<double>>();
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"bellsim: two-party correlation experiment toolkit"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App *cmd;
        RunConfig cfg;
        std::string config_path;
        int (*run)(const RunConfig &);
    };
    // Option callbacks keep pointers into each Sub, so the storage must not
    // move once addCommonOptions has run.
    std::vector<std::unique_ptr<Sub>> subs;
    const auto add = [&](const char *name, const char *desc,
                         int (*run)(const RunConfig &)) {
        auto sub = std::make_unique<Sub>();
        sub->cmd = app.add_subcommand(name, desc);
        sub->run = run;
        addCommonOptions(sub->cmd, sub->cfg, sub->config_path);
        subs.push_back(std::move(sub));
    };
    add("curves", "tabulate E(theta) for every model on a theta grid",
        cmdCurves);
    add("chsh", "analytic and Monte Carlo CHSH at the configured angles",
        cmdChsh);
    add("spin", "spin-j singlet correlation: matrix algebra vs closed form",
        cmdSpin);
    add("fourlists", "four-list counting experiment / contradiction check",
        cmdFourlists);
    add("signalling", "marginal scan and sequence relations", cmdSignalling);
    add("feasibility", "LHV feasibility of a correlation quadruple",
        cmdFeasibility);

    try {
        app.parse(argc, argv);
        for (auto &sub : subs) {
            if (sub->cmd->parsed()) {
                sub->cfg.eta_given =
                    sub->cmd->get_option("--eta")->count() > 0;
                applyConfigFile(sub->cmd, sub->cfg, sub->config_path);
                return sub->run(sub->cfg);
            }
        }
        return kExitUsage;
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::domain_error &e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument &e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

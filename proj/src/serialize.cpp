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
#include "bellsim/serialize.hpp"

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bellsim {

namespace {
void requireLabelCount(const std::vector<TrialRecord> &records,
                       const std::vector<std::string> &labels) {
    for (const auto &rec : records) {
        if (rec.outcomes.size() != labels.size()) {
            throw std::invalid_argument(
                "label count does not match per-record outcome count");
        }
    }
}
} // namespace

std::string formatDouble(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void writeTrialsCsv(std::ostream &os, const std::vector<TrialRecord> &records,
                    const std::vector<std::string> &labels) {
    requireLabelCount(records, labels);
    os << "trial_index,setting_label,outcome_a,outcome_b\n";
    for (const auto &rec : records) {
        for (std::size_t s = 0; s < rec.outcomes.size(); ++s) {
            os << rec.index << ',' << labels[s] << ',' << rec.outcomes[s].a
               << ',' << rec.outcomes[s].b << '\n';
        }
    }
}

std::vector<TrialRecord> readTrialsCsv(std::istream &is,
                                       std::vector<std::string> *labels_out) {
    std::string line;
    if (!std::getline(is, line) ||
        line != "trial_index,setting_label,outcome_a,outcome_b") {
        throw std::invalid_argument("bad trial CSV header");
    }
    std::vector<TrialRecord> records;
    std::vector<std::string> labels;
    std::int64_t current = -1;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string idx_s, label, a_s, b_s;
        if (!std::getline(row, idx_s, ',') || !std::getline(row, label, ',') ||
            !std::getline(row, a_s, ',') || !std::getline(row, b_s, ',')) {
            throw std::invalid_argument("bad trial CSV row: " + line);
        }
        const std::int64_t idx = std::stoll(idx_s);
        if (records.empty() || idx != current) {
            records.push_back(TrialRecord{idx, {}, std::nullopt});
            current = idx;
        }
        if (records.size() == 1) {
            labels.push_back(label);
        }
        records.back().outcomes.push_back({std::stoi(a_s), std::stoi(b_s)});
    }
    if (labels_out) {
        *labels_out = std::move(labels);
    }
    return records;
}

Json trialsToJson(const std::vector<TrialRecord> &records,
                  const std::vector<std::string> &labels) {
    requireLabelCount(records, labels);
    Json out = Json::array();
    for (const auto &rec : records) {
        Json entry;
        entry["trial_index"] = rec.index;
        if (rec.phi) {
            entry["phi"] = *rec.phi;
        }
        Json outcomes = Json::array();
        for (std::size_t s = 0; s < rec.outcomes.size(); ++s) {
            outcomes.push_back({{"setting_label", labels[s]},
                                {"a", rec.outcomes[s].a},
                                {"b", rec.outcomes[s].b}});
        }
        entry["outcomes"] = std::move(outcomes);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<TrialRecord> trialsFromJson(const Json &j,
                                        std::vector<std::string> *labels_out) {
    std::vector<TrialRecord> records;
    std::vector<std::string> labels;
    for (const auto &entry : j) {
        TrialRecord rec;
        rec.index = entry.at("trial_index").get<std::int64_t>();
        if (entry.contains("phi")) {
            rec.phi = entry.at("phi").get<double>();
        }
        for (const auto &o : entry.at("outcomes")) {
            if (records.empty()) {
                labels.push_back(o.at("setting_label").get<std::string>());
            }
            rec.outcomes.push_back(
                {o.at("a").get<int>(), o.at("b").get<int>()});
        }
        records.push_back(std::move(rec));
    }
    if (labels_out) {
        *labels_out = std::move(labels);
    }
    return records;
}

Json toJson(const CountSummary &c) {
    return {{"total", c.total},
            {"n_ap_b", c.n_ap_b},
            {"n_a_b", c.n_a_b},
            {"n_a_bp", c.n_a_bp},
            {"n_ap_bp", c.n_ap_bp},
            {"u_ap_b", c.u_ap_b()},
            {"u_a_b", c.u_a_b()},
            {"u_a_bp", c.u_a_bp()},
            {"u_ap_bp", c.u_ap_bp()}};
}

Json toJson(const InequalityCheck &check) {
    return {{"holds_n", check.holds_n},
            {"slack_n", check.slack_n},
            {"holds_u", check.holds_u},
            {"slack_u", check.slack_u}};
}

Json toJson(const FourListResult &result) {
    return {{"counts", toJson(result.counts)},
            {"count_inequality", toJson(result.inequality)},
            {"expectations",
             {{"ap_b", result.expectations[0]},
              {"a_b", result.expectations[1]},
              {"a_bp", result.expectations[2]},
              {"ap_bp", result.expectations[3]}}},
            {"chsh", result.chsh_score}};
}

Json toJson(const FeasibilityVerdict &verdict) {
    Json out;
    out["feasible"] = verdict.feasible;
    if (verdict.witness) {
        Json weights = Json::array();
        for (Eigen::Index i = 0; i < verdict.witness->size(); ++i) {
            weights.push_back((*verdict.witness)(i));
        }
        out["witness_weights"] = std::move(weights);
    }
    if (verdict.violated_facet) {
        out["violated_facet"] = {
            {"signs", verdict.violated_facet->signs},
            {"value", verdict.violated_facet->value}};
    }
    return out;
}

Json toJson(const MarginalReport &report) {
    return {{"setting_label", report.setting_label},
            {"empirical_mean_a", report.empirical_mean_a},
            {"empirical_mean_b", report.empirical_mean_b},
            {"n_trials", report.n_trials},
            {"standard_error", report.standard_error}};
}

Json toJson(const std::vector<MarginalReport> &reports) {
    Json out = Json::array();
    for (const auto &r : reports) {
        out.push_back(toJson(r));
    }
    return out;
}

} // namespace bellsim

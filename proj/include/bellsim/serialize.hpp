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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellsim/list_experiment.hpp"
#include "bellsim/samplers.hpp"
#include "bellsim/signalling.hpp"

namespace bellsim {

using Json = nlohmann::ordered_json;

/// CSV with columns trial_index,setting_label,outcome_a,outcome_b,
/// one row per (trial, setting). labels must match the per-record outcome
/// count. Round-trips bit-exactly through readTrialsCsv.
void writeTrialsCsv(std::ostream &os, const std::vector<TrialRecord> &records,
                    const std::vector<std::string> &labels);

std::vector<TrialRecord> readTrialsCsv(std::istream &is,
                                       std::vector<std::string> *labels_out);

/// JSON form also carries the hidden variable phi for classical records.
Json trialsToJson(const std::vector<TrialRecord> &records,
                  const std::vector<std::string> &labels);
std::vector<TrialRecord> trialsFromJson(const Json &j,
                                        std::vector<std::string> *labels_out);

Json toJson(const CountSummary &counts);
Json toJson(const InequalityCheck &check);
Json toJson(const FourListResult &result);
Json toJson(const FeasibilityVerdict &verdict);
Json toJson(const MarginalReport &report);
Json toJson(const std::vector<MarginalReport> &reports);

/// Fixed-format decimal rendering used for deterministic CSV output.
std::string formatDouble(double value);

} // namespace bellsim

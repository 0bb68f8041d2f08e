// Copyright 2026 The eqc-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * CSV and JSON rendering of experiment results.
 *
 * CSV: a "# eqc <version> config=<json>" line, a header row, one row per
 * record, reals printed with 17 significant digits, optional "# ..." footer
 * lines for fitted slopes. JSON: {tool_version, config_echo, results}.
 */
#pragma once

#include "eqc/experiment.hpp"

#include "json.hpp"

#include <iosfwd>

namespace eqc::report {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

[[nodiscard]] Format parse_format(std::string_view name);

/// Round-trip exact "%.17g"; "inf"/"-inf"/"nan" for non-finite values.
[[nodiscard]] std::string format_real(double value);

void write_distribution(std::ostream &out, Format format, const Json &config,
                        std::span<const experiment::DistributionRow> rows);
void write_estimate(std::ostream &out, Format format, const Json &config, const experiment::EstimateResult &result);
void write_certify(std::ostream &out, Format format, const Json &config, const experiment::CertifyResult &result);
void write_scaling(std::ostream &out, Format format, const Json &config, const experiment::ScalingResult &result);
void write_baseline(std::ostream &out, Format format, const Json &config,
                    const experiment::BaselineSweepResult &result);
void write_oracle(std::ostream &out, Format format, const Json &config, const experiment::OracleResult &result);

} // namespace eqc::report

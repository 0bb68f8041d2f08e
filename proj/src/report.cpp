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
#include "eqc/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace eqc::report {

namespace {

using namespace eqc::experiment;

// JSON has no infinity; non-finite reals become strings.
Json real(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return format_real(v);
}

Json fit_json(const LogLogFit &fit) { return Json{{"slope", real(fit.slope)}, {"intercept", real(fit.intercept)}}; }

Json envelope(const Json &config, Json results) {
    return Json{{"tool_version", kToolVersion}, {"config_echo", config}, {"results", std::move(results)}};
}

class Csv {
  public:
    Csv(std::ostream &out, const Json &config) : out_(out) {
        out_ << "# eqc " << kToolVersion << " config=" << config.dump() << '\n';
    }

    template <class... Cells> void row(const Cells &...cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
        out_ << '\n';
    }

    void comment(const std::string &text) { out_ << "# " << text << '\n'; }

  private:
    static std::string cell(double v) { return format_real(v); }
    static std::string cell(const char *s) { return s; }
    static std::string cell(const std::string &s) { return s; }
    static std::string cell(bool b) { return b ? "true" : "false"; }
    template <class T> static std::string cell(const std::optional<T> &v) { return v ? cell(*v) : std::string{}; }
    template <class T>
        requires std::is_integral_v<T>
    static std::string cell(T v) { return std::to_string(v); }

    std::ostream &out_;
};

} // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_real(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_distribution(std::ostream &out, Format format, const Json &config,
                        std::span<const DistributionRow> rows) {
    if (format == Format::Json) {
        Json results = Json::array();
        for (const auto &r : rows) {
            results.push_back({{"n", r.n},
                               {"theta", r.theta},
                               {"j", r.j},
                               {"re", r.amplitude.real()},
                               {"im", r.amplitude.imag()},
                               {"probability", r.probability}});
        }
        out << envelope(config, std::move(results)).dump(2) << '\n';
        return;
    }
    Csv csv(out, config);
    csv.row("n", "theta", "j", "re", "im", "probability");
    for (const auto &r : rows) {
        csv.row(r.n, r.theta, r.j, r.amplitude.real(), r.amplitude.imag(), r.probability);
    }
}

void write_estimate(std::ostream &out, Format format, const Json &config, const EstimateResult &result) {
    const auto &rep = result.report;
    if (format == Format::Json) {
        Json results{{"theta_true", result.theta_true.value()},
                     {"scenario_aliased", result.scenario_aliased},
                     {"outcome_m", rep.outcome_m},
                     {"outcome_probability", result.outcome_probability},
                     {"theta_hat", rep.theta_hat.value()},
                     {"delta_t_hat", rep.delta_t_hat},
                     {"delta_t_period", rep.delta_t_period},
                     {"gamma", rep.gamma},
                     {"confidence", rep.confidence},
                     {"interval", {rep.theta_lo, rep.theta_hi}},
                     {"interval_contains_truth", result.interval_contains_truth},
                     {"aliasing_note", rep.aliasing_note}};
        out << envelope(config, std::move(results)).dump(2) << '\n';
        return;
    }
    Csv csv(out, config);
    csv.row("theta_true", "outcome_m", "outcome_probability", "theta_hat", "delta_t_hat", "delta_t_period", "gamma",
            "confidence", "theta_lo", "theta_hi", "interval_contains_truth", "scenario_aliased");
    csv.row(result.theta_true.value(), rep.outcome_m, result.outcome_probability, rep.theta_hat.value(),
            rep.delta_t_hat, rep.delta_t_period, rep.gamma, rep.confidence, rep.theta_lo, rep.theta_hi,
            result.interval_contains_truth, result.scenario_aliased);
    csv.comment("delta_t is recovered modulo delta_t_period = 2*pi/E");
}

void write_certify(std::ostream &out, Format format, const Json &config, const CertifyResult &result) {
    if (format == Format::Json) {
        Json rows = Json::array();
        for (const auto &r : result.rows) {
            rows.push_back({{"n", r.n},
                            {"gamma", r.gamma},
                            {"tail_bound", r.tail_bound},
                            {"max_tail_exact", r.max_tail_exact},
                            {"max_tail_ratio", r.max_tail_ratio},
                            {"min_coverage", r.min_coverage},
                            {"max_amplitude_ratio", r.max_amplitude_ratio},
                            {"amplitude_violations", r.amplitude_violations},
                            {"tail_violations", r.tail_violations}});
        }
        Json results{{"rows", std::move(rows)},
                     {"max_amplitude_ratio", result.max_amplitude_ratio},
                     {"max_tail_ratio", result.max_tail_ratio},
                     {"amplitude_checks", result.amplitude_checks},
                     {"tail_checks", result.tail_checks},
                     {"amplitude_violations", result.amplitude_violations},
                     {"tail_violations", result.tail_violations},
                     {"passed", result.passed()}};
        out << envelope(config, std::move(results)).dump(2) << '\n';
        return;
    }
    Csv csv(out, config);
    csv.row("n", "gamma", "tail_bound", "max_tail_exact", "max_tail_ratio", "min_coverage", "max_amplitude_ratio",
            "amplitude_violations", "tail_violations");
    for (const auto &r : result.rows) {
        csv.row(r.n, r.gamma, r.tail_bound, r.max_tail_exact, r.max_tail_ratio, r.min_coverage,
                r.max_amplitude_ratio, r.amplitude_violations, r.tail_violations);
    }
    csv.comment("max_amplitude_ratio=" + format_real(result.max_amplitude_ratio) +
                " max_tail_ratio=" + format_real(result.max_tail_ratio) +
                " passed=" + (result.passed() ? "true" : "false"));
}

void write_scaling(std::ostream &out, Format format, const Json &config, const ScalingResult &result) {
    if (format == Format::Json) {
        Json records = Json::array();
        for (const auto &r : result.records) {
            Json rec{{"n", r.n},
                     {"N", r.dimension},
                     {"clock_count", r.clock_count},
                     {"gamma", r.gamma},
                     {"confidence", r.confidence},
                     {"delta_theta", r.delta_theta},
                     {"exact_coverage", r.exact_coverage},
                     {"empirical_coverage", r.empirical_coverage},
                     {"empirical_rmse", r.empirical_rmse},
                     {"exact_rmse", r.exact_rmse}};
            if (r.baseline_rmse) {
                rec["baseline_rmse"] = *r.baseline_rmse;
            }
            records.push_back(std::move(rec));
        }
        Json results{{"records", std::move(records)},
                     {"delta_theta_fit", fit_json(result.delta_theta_fit)},
                     {"rmse_fit", fit_json(result.rmse_fit)}};
        if (result.baseline_fit) {
            results["baseline_fit"] = fit_json(*result.baseline_fit);
        }
        out << envelope(config, std::move(results)).dump(2) << '\n';
        return;
    }
    Csv csv(out, config);
    csv.row("n", "N", "clock_count", "gamma", "confidence", "delta_theta", "exact_coverage", "empirical_coverage",
            "empirical_rmse", "exact_rmse", "baseline_rmse");
    for (const auto &r : result.records) {
        csv.row(r.n, r.dimension, r.clock_count, r.gamma, r.confidence, r.delta_theta, r.exact_coverage,
                r.empirical_coverage, r.empirical_rmse, r.exact_rmse, r.baseline_rmse);
    }
    csv.comment("loglog_slope delta_theta_vs_clocks=" + format_real(result.delta_theta_fit.slope));
    csv.comment("loglog_slope rmse_vs_clocks=" + format_real(result.rmse_fit.slope));
    if (result.baseline_fit) {
        csv.comment("loglog_slope baseline_rmse_vs_clocks=" + format_real(result.baseline_fit->slope));
    }
}

void write_baseline(std::ostream &out, Format format, const Json &config, const BaselineSweepResult &result) {
    if (format == Format::Json) {
        Json records = Json::array();
        for (const auto &r : result.records) {
            records.push_back({{"repetitions", r.repetitions},
                               {"clock_count", r.clock_count},
                               {"mean_theta_hat", r.mean_theta_hat},
                               {"rmse", r.rmse},
                               {"mean_std_error", real(r.mean_std_error)},
                               {"finite_fraction", r.finite_fraction}});
        }
        Json results{{"records", std::move(records)},
                     {"rmse_fit", fit_json(result.rmse_fit)},
                     {"estimator_domain", "theta in [0, 1/2]"}};
        out << envelope(config, std::move(results)).dump(2) << '\n';
        return;
    }
    Csv csv(out, config);
    csv.row("repetitions", "clock_count", "mean_theta_hat", "rmse", "mean_std_error", "finite_fraction");
    for (const auto &r : result.records) {
        csv.row(r.repetitions, r.clock_count, r.mean_theta_hat, r.rmse, r.mean_std_error, r.finite_fraction);
    }
    csv.comment("loglog_slope rmse_vs_clocks=" + format_real(result.rmse_fit.slope));
    csv.comment("estimator inverts cos^2(pi theta); valid for theta in [0, 1/2] only");
}

void write_oracle(std::ostream &out, Format format, const Json &config, const OracleResult &result) {
    if (format == Format::Json) {
        Json rows = Json::array();
        for (const auto &r : result.rows) {
            rows.push_back({{"n", r.n},
                            {"scenarios", r.scenarios},
                            {"max_deviation", r.max_deviation},
                            {"max_leakage", r.max_leakage},
                            {"max_norm_drift", r.max_norm_drift},
                            {"max_shift_deviation", r.max_shift_deviation},
                            {"passed", r.passed}});
        }
        Json results{{"rows", std::move(rows)}, {"passed", result.passed()}};
        out << envelope(config, std::move(results)).dump(2) << '\n';
        return;
    }
    Csv csv(out, config);
    csv.row("n", "scenarios", "max_deviation", "max_leakage", "max_norm_drift", "max_shift_deviation", "passed");
    for (const auto &r : result.rows) {
        csv.row(r.n, r.scenarios, r.max_deviation, r.max_leakage, r.max_norm_drift, r.max_shift_deviation, r.passed);
    }
}

} // namespace eqc::report

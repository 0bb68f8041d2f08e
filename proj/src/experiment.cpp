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
#include "eqc/experiment.hpp"

#include "eqc/effective_state.hpp"
#include "eqc/physical_oracle.hpp"
#include "eqc/qft.hpp"
#include "eqc/random.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <future>

namespace eqc::experiment {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

template <class T> T parse_number(std::string_view text, std::string_view what) {
    text = trim(text);
    T value{};
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

double finite_theta(double value) {
    if (!std::isfinite(value)) {
        throw ConfigError("theta grid values must be finite");
    }
    return value;
}

} // namespace

std::vector<double> parse_theta_grid(std::string_view spec) {
    spec = trim(spec);
    if (spec.starts_with("linspace:")) {
        const auto parts = split(spec.substr(9), ':');
        if (parts.size() != 3) {
            throw ConfigError("linspace grid needs start:stop:count");
        }
        const double start = finite_theta(parse_number<double>(parts[0], "linspace start"));
        const double stop = finite_theta(parse_number<double>(parts[1], "linspace stop"));
        const auto count = parse_number<std::size_t>(parts[2], "linspace count");
        if (count == 0) {
            throw ConfigError("linspace count must be positive");
        }
        std::vector<double> grid(count, start);
        for (std::size_t i = 1; i < count; ++i) {
            grid[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
        }
        return grid;
    }
    if (spec.starts_with("list:")) {
        std::vector<double> grid;
        for (auto part : split(spec.substr(5), ',')) {
            grid.push_back(finite_theta(parse_number<double>(part, "theta list value")));
        }
        return grid;
    }
    return {finite_theta(parse_number<double>(spec, "theta"))};
}

NRange parse_n_range(std::string_view spec) {
    const auto parts = split(trim(spec), ':');
    if (parts.size() > 2) {
        throw ConfigError("n range must be A:B");
    }
    const auto lo = parse_number<unsigned>(parts.front(), "n");
    const auto hi = parts.size() == 2 ? parse_number<unsigned>(parts[1], "n") : lo;
    if (lo == 0 || hi < lo) {
        throw ConfigError("n range must satisfy 1 <= A <= B");
    }
    return {lo, hi};
}

std::vector<std::uint64_t> parse_uint_list(std::string_view spec) {
    std::vector<std::uint64_t> values;
    for (auto part : split(trim(spec), ',')) {
        const auto v = parse_number<std::uint64_t>(part, "integer list value");
        if (v == 0) {
            throw ConfigError("list values must be positive");
        }
        values.push_back(v);
    }
    return values;
}

LogLogFit fit_log_log(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ConfigError("log-log fit needs two or more paired points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw ConfigError("log-log fit needs positive values");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double count = static_cast<double>(x.size());
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) {
        throw ConfigError("log-log fit needs distinct x values");
    }
    const double slope = (count * sxy - sx * sy) / denom;
    return {slope, (sy - slope * sx) / count};
}

std::vector<DistributionRow> run_distribution(unsigned n, std::span<const double> thetas) {
    const RegisterConfig config(n);
    std::vector<DistributionRow> rows;
    rows.reserve(thetas.size() * config.dimension());
    for (double raw : thetas) {
        const PhaseFraction theta(raw);
        for (std::size_t j = 0; j < config.dimension(); ++j) {
            const Complex c = amplitude_cj(config, theta, j);
            rows.push_back({n, theta.value(), j, c, std::norm(c)});
        }
    }
    return rows;
}

EstimateResult run_estimate(const EstimateConfig &config) {
    const RegisterConfig reg(config.n);
    EstimateResult result;
    double energy = config.energy_gap;
    if (config.theta) {
        result.theta_true = PhaseFraction(*config.theta);
        result.scenario_aliased = *config.theta < 0.0 || *config.theta >= 1.0;
    } else if (config.scenario) {
        result.theta_true = config.scenario->phase();
        result.scenario_aliased = config.scenario->aliased();
        energy = config.scenario->energy_gap;
    } else {
        throw ConfigError("estimate needs either theta or a clock scenario");
    }

    const auto prepared = prepare_final_state(reg, result.theta_true);
    const auto readout = inverse_qft_apply(prepared, reg, QftMethod::Circuit);
    const auto dist = distribution_from_state(readout, reg, result.theta_true);
    const std::size_t m = sample(dist, config.seed, 1).front();

    result.outcome_probability = dist[m];
    result.report = estimate(m, reg, energy, config.tolerance);
    result.interval_contains_truth = result.report.interval_contains(result.theta_true);
    return result;
}

CertifyResult run_certify_bounds(const CertifyConfig &config) {
    std::vector<std::future<std::vector<CertifyRow>>> jobs;
    for (unsigned n = config.n_range.lo; n <= config.n_range.hi; ++n) {
        jobs.push_back(std::async(std::launch::async, [n, &config] {
            const RegisterConfig reg(n);
            const auto half = static_cast<std::int64_t>(reg.dimension() / 2);
            std::vector<CertifyRow> rows;
            for (std::int64_t g = 2; g <= half; ++g) {
                rows.push_back({n, g, tail_probability_bound(g), 0.0, 0.0, 1.0, 0.0, 0, 0});
            }
            double max_amp_ratio = 0.0;
            std::size_t amp_violations = 0;
            for (double raw : config.thetas) {
                const PhaseFraction theta(config.avoid_exact ? raw + 1e-12 : raw);
                for (std::size_t j = 0; j < reg.dimension(); ++j) {
                    if (wrapped_distance(reg, theta, j) < 1.0) {
                        continue;
                    }
                    const double magnitude = std::abs(amplitude_cj(reg, theta, j));
                    const double bound = amplitude_bound(reg, theta, j);
                    max_amp_ratio = std::max(max_amp_ratio, magnitude / bound);
                    if (magnitude > bound) {
                        ++amp_violations;
                    }
                }
                const auto tails = tail_profile(distribution(reg, theta), config.mode);
                for (auto &row : rows) {
                    const double tail = tails[static_cast<std::size_t>(row.gamma)];
                    row.max_tail_exact = std::max(row.max_tail_exact, tail);
                    row.max_tail_ratio = std::max(row.max_tail_ratio, tail / row.tail_bound);
                    row.min_coverage = std::min(row.min_coverage, 1.0 - tail);
                    if (tail > row.tail_bound) {
                        ++row.tail_violations;
                    }
                }
            }
            for (auto &row : rows) {
                row.max_amplitude_ratio = max_amp_ratio;
                row.amplitude_violations = amp_violations;
            }
            if (rows.empty()) {
                // Keep the amplitude certificate for registers too small to carry a gamma >= 2 window.
                rows.push_back({n, 0, 0.0, 0.0, 0.0, 1.0, max_amp_ratio, amp_violations, 0});
            }
            return rows;
        }));
    }

    CertifyResult result;
    for (auto &job : jobs) {
        const auto rows = job.get();
        const RegisterConfig reg(rows.front().n);
        result.max_amplitude_ratio = std::max(result.max_amplitude_ratio, rows.front().max_amplitude_ratio);
        result.amplitude_violations += rows.front().amplitude_violations;
        result.amplitude_checks += config.thetas.size() * reg.dimension();
        for (const auto &row : rows) {
            if (row.gamma >= 2) {
                result.max_tail_ratio = std::max(result.max_tail_ratio, row.max_tail_ratio);
                result.tail_violations += row.tail_violations;
                result.tail_checks += config.thetas.size();
            }
            result.rows.push_back(row);
        }
    }
    return result;
}

ScalingResult run_scaling(const ScalingConfig &config) {
    if (config.gamma < 2) {
        throw ConfigError("scaling needs gamma >= 2");
    }
    if (config.trials == 0) {
        throw ConfigError("scaling needs at least one trial");
    }
    const PhaseFraction theta(config.theta);
    const auto spec = ToleranceSpec::from_gamma(config.gamma);

    std::vector<std::future<ScalingRecord>> jobs;
    for (unsigned n = config.n_range.lo; n <= config.n_range.hi; ++n) {
        jobs.push_back(std::async(std::launch::async, [n, theta, spec, &config] {
            const RegisterConfig reg(n);
            const auto dist = distribution(reg, theta);
            const std::uint64_t point_seed = derive_seed(config.seed, n);
            const auto draws = sample(dist, point_seed, config.trials);

            std::size_t covered = 0;
            double squared = 0.0;
            for (const auto m : draws) {
                if (wrapped_distance(reg, theta, m) <= static_cast<double>(spec.gamma())) {
                    ++covered;
                }
                const double e = wrapped_error(reg, theta, m);
                squared += e * e;
            }
            const auto trials = static_cast<double>(config.trials);
            const auto half = static_cast<std::int64_t>(reg.dimension() / 2);

            ScalingRecord rec{};
            rec.n = n;
            rec.dimension = reg.dimension();
            rec.clock_count = reg.clock_count();
            rec.gamma = spec.gamma();
            rec.confidence = spec.confidence();
            rec.delta_theta = static_cast<double>(spec.gamma()) / static_cast<double>(reg.dimension());
            // Every outcome lies within N/2 of N theta on the ring.
            rec.exact_coverage = spec.gamma() <= half ? 1.0 - tail_probability_exact(dist, spec.gamma()) : 1.0;
            rec.empirical_coverage = static_cast<double>(covered) / trials;
            rec.empirical_rmse = std::sqrt(squared / trials);
            rec.exact_rmse = exact_rmse(dist);
            if (config.with_baseline) {
                rec.baseline_rmse =
                    baseline_point(theta, reg.dimension() - 1, config.trials, derive_seed(point_seed, 0xBA5E)).rmse;
            }
            return rec;
        }));
    }

    ScalingResult result;
    std::vector<double> clocks, widths, rmses, baseline_rmses;
    for (auto &job : jobs) {
        auto rec = job.get();
        clocks.push_back(static_cast<double>(rec.clock_count));
        widths.push_back(rec.delta_theta);
        rmses.push_back(rec.empirical_rmse);
        if (rec.baseline_rmse) {
            baseline_rmses.push_back(*rec.baseline_rmse);
        }
        result.records.push_back(rec);
    }
    if (result.records.size() >= 2) {
        result.delta_theta_fit = fit_log_log(clocks, widths);
        if (std::all_of(rmses.begin(), rmses.end(), [](double r) { return r > 0.0; })) {
            result.rmse_fit = fit_log_log(clocks, rmses);
        }
        if (baseline_rmses.size() == clocks.size()) {
            result.baseline_fit = fit_log_log(clocks, baseline_rmses);
        }
    }
    return result;
}

BaselineRecord baseline_point(PhaseFraction theta, std::uint64_t repetitions, std::size_t trials,
                              std::uint64_t seed) {
    if (trials == 0) {
        throw ConfigError("baseline needs at least one trial");
    }
    double sum_hat = 0.0, squared = 0.0, sum_se = 0.0;
    std::size_t finite = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto run = run_baseline(theta, repetitions, derive_seed(seed, t));
        const auto est = baseline_estimate(run);
        sum_hat += est.theta_hat;
        const double e = est.theta_hat - theta.value();
        squared += e * e;
        if (std::isfinite(est.std_error)) {
            sum_se += est.std_error;
            ++finite;
        }
    }
    const auto count = static_cast<double>(trials);
    return {repetitions,
            2 * repetitions,
            sum_hat / count,
            std::sqrt(squared / count),
            finite > 0 ? sum_se / static_cast<double>(finite) : std::numeric_limits<double>::infinity(),
            static_cast<double>(finite) / count};
}

BaselineSweepResult run_baseline_sweep(const BaselineConfig &config) {
    if (config.repetitions.empty()) {
        throw ConfigError("baseline sweep needs at least one repetition count");
    }
    const PhaseFraction theta(config.theta);
    std::vector<std::future<BaselineRecord>> jobs;
    for (const auto k : config.repetitions) {
        jobs.push_back(std::async(std::launch::async, [theta, k, &config] {
            return baseline_point(theta, k, config.trials, derive_seed(config.seed, k));
        }));
    }
    BaselineSweepResult result;
    std::vector<double> clocks, rmses;
    for (auto &job : jobs) {
        result.records.push_back(job.get());
        clocks.push_back(static_cast<double>(result.records.back().clock_count));
        rmses.push_back(result.records.back().rmse);
    }
    if (result.records.size() >= 2 &&
        std::all_of(rmses.begin(), rmses.end(), [](double r) { return r > 0.0; })) {
        result.rmse_fit = fit_log_log(clocks, rmses);
    }
    return result;
}

bool OracleResult::passed() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const OracleRow &r) { return r.passed; });
}

OracleResult run_oracle_check(const OracleConfig &config) {
    if (config.n_range.hi > kMaxOracleQubits) {
        throw ConfigError("oracle check limited to n <= " + std::to_string(kMaxOracleQubits));
    }
    OracleResult result;
    for (unsigned n = config.n_range.lo; n <= config.n_range.hi; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const RegisterConfig reg(n);
        const auto prepared = prepare_physical(reg);
        Rng rng(derive_seed(config.seed, n));

        OracleRow row{n, config.scenarios, 0.0, 0.0, 0.0, 0.0, 0.0, true};
        for (std::size_t s = 0; s < config.scenarios; ++s) {
            ClockScenario scenario{0.5 + 1.5 * rng.uniform(), 5.0 * rng.uniform(), 5.0 * rng.uniform()};
            const double shift = 3.0 * rng.uniform();

            const auto evolved = evolve_physical(prepared, scenario);
            row.max_norm_drift = std::max(row.max_norm_drift, std::abs(evolved.norm_squared() - 1.0));
            const auto projected = project_to_tilde(evolved, reg);
            row.max_leakage = std::max(row.max_leakage, projected.leakage);

            const auto effective = prepare_final_state(reg, scenario.phase());
            row.max_deviation = std::max(
                row.max_deviation, max_abs_deviation(projected.amplitudes.entries(), effective.entries()));

            ClockScenario shifted = scenario;
            shifted.proper_time_a += shift;
            shifted.proper_time_b += shift;
            const auto reprojected = project_to_tilde(evolve_physical(prepared, shifted), reg);
            row.max_shift_deviation =
                std::max(row.max_shift_deviation,
                         max_abs_deviation(projected.amplitudes.entries(), reprojected.amplitudes.entries()));
        }
        row.passed = row.max_deviation < kOracleTolerance && row.max_leakage < kLeakageTolerance &&
                     row.max_norm_drift < kOracleTolerance && row.max_shift_deviation < kOracleTolerance;
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.rows.push_back(row);
    }
    return result;
}

} // namespace eqc::experiment

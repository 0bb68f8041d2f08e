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
// eqc: command-line front end for the entangled-clock phase-estimation
// simulator. Exit codes: 0 success, 1 internal error, 2 invalid config,
// 3 certification or check failure.

#include "eqc/experiment.hpp"
#include "eqc/physical_oracle.hpp"
#include "eqc/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using eqc::report::Json;

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidConfig = 2, kCheckFailed = 3 };

struct Options {
    std::string n = "3";
    std::string n_range;
    std::string theta;
    std::optional<std::int64_t> gamma;
    std::optional<double> confidence;
    double energy = 1.0;
    std::optional<double> t_a;
    std::optional<double> t_b;
    std::size_t trials = eqc::experiment::kDefaultTrials;
    std::size_t scenarios = 100;
    std::optional<std::uint64_t> seed;
    std::string repetitions = "100,1000,10000,100000";
    std::string out;
    std::string format;
    bool linear_tail = false;
    bool avoid_exact = false;
    bool baseline = false;
};

std::uint64_t require_seed(const Options &opt) {
    if (!opt.seed) {
        throw eqc::ConfigError("--seed is required for sampling subcommands");
    }
    return *opt.seed;
}

unsigned single_n(const Options &opt) {
    const auto range = eqc::experiment::parse_n_range(opt.n);
    if (range.lo != range.hi) {
        throw eqc::ConfigError("--n takes a single value; use --n-range for sweeps");
    }
    return range.lo;
}

eqc::experiment::NRange n_range(const Options &opt, std::string_view fallback) {
    return eqc::experiment::parse_n_range(opt.n_range.empty() ? fallback : opt.n_range);
}

eqc::ToleranceSpec tolerance(const Options &opt) {
    if (opt.gamma && opt.confidence) {
        throw eqc::ConfigError("give either --gamma or --confidence, not both");
    }
    if (opt.confidence) {
        return eqc::ToleranceSpec::from_confidence(*opt.confidence);
    }
    return eqc::ToleranceSpec::from_gamma(opt.gamma.value_or(6));
}

eqc::report::Format format_or(const Options &opt, eqc::report::Format fallback) {
    return opt.format.empty() ? fallback : eqc::report::parse_format(opt.format);
}

// Writes to --out when given, stdout otherwise.
template <class Writer> void emit(const Options &opt, Writer &&writer) {
    if (opt.out.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
        throw eqc::ConfigError("cannot open output file '" + opt.out + "'");
    }
    writer(file);
}

int cmd_distribution(const Options &opt) {
    const unsigned n = single_n(opt);
    const auto grid = eqc::experiment::parse_theta_grid(opt.theta.empty() ? "0" : opt.theta);
    const auto rows = eqc::experiment::run_distribution(n, grid);
    const Json config{{"subcommand", "distribution"}, {"n", n}, {"theta", opt.theta.empty() ? "0" : opt.theta}};
    emit(opt, [&](std::ostream &os) {
        eqc::report::write_distribution(os, format_or(opt, eqc::report::Format::Csv), config, rows);
    });
    return kOk;
}

int cmd_estimate(const Options &opt) {
    eqc::experiment::EstimateConfig cfg;
    cfg.n = single_n(opt);
    cfg.energy_gap = opt.energy;
    cfg.tolerance = tolerance(opt);
    cfg.seed = require_seed(opt);
    Json config{{"subcommand", "estimate"}, {"n", cfg.n}, {"energy", cfg.energy_gap},
                {"gamma", cfg.tolerance.gamma()}, {"seed", cfg.seed}};
    if (!opt.theta.empty()) {
        if (opt.t_a || opt.t_b) {
            throw eqc::ConfigError("give either --theta or --t-a/--t-b, not both");
        }
        const auto grid = eqc::experiment::parse_theta_grid(opt.theta);
        if (grid.size() != 1) {
            throw eqc::ConfigError("estimate takes a single theta");
        }
        cfg.theta = grid.front();
        config["theta"] = grid.front();
    } else if (opt.t_a && opt.t_b) {
        cfg.scenario = eqc::ClockScenario{opt.energy, *opt.t_a, *opt.t_b};
        cfg.scenario->validate();
        config["t_a"] = *opt.t_a;
        config["t_b"] = *opt.t_b;
    } else {
        throw eqc::ConfigError("estimate needs --theta or both --t-a and --t-b");
    }
    const auto result = eqc::experiment::run_estimate(cfg);
    emit(opt, [&](std::ostream &os) {
        eqc::report::write_estimate(os, format_or(opt, eqc::report::Format::Json), config, result);
    });
    return kOk;
}

int cmd_certify(const Options &opt) {
    eqc::experiment::CertifyConfig cfg;
    cfg.n_range = n_range(opt, "2:8");
    const std::string grid = opt.theta.empty() ? "linspace:0:0.999:1000" : opt.theta;
    cfg.thetas = eqc::experiment::parse_theta_grid(grid);
    cfg.mode = opt.linear_tail ? eqc::TailMode::Linear : eqc::TailMode::Wrapped;
    cfg.avoid_exact = opt.avoid_exact;
    for (unsigned n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
        (void)eqc::RegisterConfig(n);
    }
    const auto result = eqc::experiment::run_certify_bounds(cfg);
    const Json config{{"subcommand", "certify-bounds"},
                      {"n_range", {cfg.n_range.lo, cfg.n_range.hi}},
                      {"theta", grid},
                      {"linear_tail", opt.linear_tail},
                      {"avoid_exact", opt.avoid_exact}};
    emit(opt, [&](std::ostream &os) {
        eqc::report::write_certify(os, format_or(opt, eqc::report::Format::Csv), config, result);
    });
    return result.passed() ? kOk : kCheckFailed;
}

int cmd_scaling(const Options &opt) {
    eqc::experiment::ScalingConfig cfg;
    cfg.n_range = n_range(opt, "5:10");
    const auto grid = eqc::experiment::parse_theta_grid(opt.theta.empty() ? "0.3" : opt.theta);
    if (grid.size() != 1) {
        throw eqc::ConfigError("scaling takes a single theta");
    }
    cfg.theta = grid.front();
    cfg.gamma = tolerance(opt).gamma();
    cfg.trials = opt.trials;
    cfg.seed = require_seed(opt);
    cfg.with_baseline = opt.baseline;
    for (unsigned n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
        (void)eqc::RegisterConfig(n);
    }
    const auto result = eqc::experiment::run_scaling(cfg);
    const Json config{{"subcommand", "scaling"}, {"n_range", {cfg.n_range.lo, cfg.n_range.hi}},
                      {"theta", cfg.theta},     {"gamma", cfg.gamma},
                      {"trials", cfg.trials},   {"seed", cfg.seed},
                      {"baseline", cfg.with_baseline}};
    emit(opt, [&](std::ostream &os) {
        eqc::report::write_scaling(os, format_or(opt, eqc::report::Format::Csv), config, result);
    });
    return kOk;
}

int cmd_baseline(const Options &opt) {
    eqc::experiment::BaselineConfig cfg;
    const auto grid = eqc::experiment::parse_theta_grid(opt.theta.empty() ? "0.2" : opt.theta);
    if (grid.size() != 1) {
        throw eqc::ConfigError("baseline takes a single theta");
    }
    cfg.theta = grid.front();
    cfg.repetitions = eqc::experiment::parse_uint_list(opt.repetitions);
    cfg.trials = opt.trials;
    cfg.seed = require_seed(opt);
    if (cfg.theta < 0.0 || cfg.theta > 0.5) {
        std::cerr << "warning: the baseline estimator only inverts theta in [0, 1/2]\n";
    }
    const auto result = eqc::experiment::run_baseline_sweep(cfg);
    const Json config{{"subcommand", "baseline"}, {"theta", cfg.theta}, {"repetitions", cfg.repetitions},
                      {"trials", cfg.trials},     {"seed", cfg.seed}};
    emit(opt, [&](std::ostream &os) {
        eqc::report::write_baseline(os, format_or(opt, eqc::report::Format::Csv), config, result);
    });
    return kOk;
}

int cmd_oracle(const Options &opt) {
    eqc::experiment::OracleConfig cfg;
    cfg.n_range = n_range(opt, "1:3");
    cfg.scenarios = opt.scenarios;
    cfg.seed = require_seed(opt);
    const auto result = eqc::experiment::run_oracle_check(cfg);
    for (const auto &row : result.rows) {
        std::cerr << "oracle n=" << row.n << " " << (row.passed ? "pass" : "FAIL") << " (" << row.seconds
                  << " s)\n";
    }
    const Json config{{"subcommand", "oracle-check"},
                      {"n_range", {cfg.n_range.lo, cfg.n_range.hi}},
                      {"scenarios", cfg.scenarios},
                      {"seed", cfg.seed}};
    emit(opt, [&](std::ostream &os) {
        eqc::report::write_oracle(os, format_or(opt, eqc::report::Format::Csv), config, result);
    });
    return result.passed() ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entangled-clock phase-estimation simulator"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--out", opt.out, "Output file (default stdout)");
        sub->add_option("--format", opt.format, "csv or json");
    };

    auto *dist = app.add_subcommand("distribution", "Amplitudes c_j and outcome probabilities");
    dist->add_option("--n", opt.n, "Effective qubits");
    dist->add_option("--theta", opt.theta, "Theta value or grid (linspace:a:b:c, list:v1,v2)");
    add_output(dist);

    auto *est = app.add_subcommand("estimate", "Run the full protocol once and report the estimate");
    est->add_option("--n", opt.n, "Effective qubits");
    est->add_option("--theta", opt.theta, "Phase fraction E*dt/(2 pi)");
    est->add_option("--t-a", opt.t_a, "Proper time of the A clocks");
    est->add_option("--t-b", opt.t_b, "Proper time of the B clocks");
    est->add_option("--energy", opt.energy, "Energy gap E (hbar = 1)");
    est->add_option("--gamma", opt.gamma, "Tolerance window half-width");
    est->add_option("--confidence", opt.confidence, "Target confidence (sets gamma)");
    est->add_option("--seed", opt.seed, "Sampler seed");
    add_output(est);

    auto *cert = app.add_subcommand("certify-bounds", "Check amplitude and tail bounds over a sweep");
    cert->add_option("--n-range", opt.n_range, "A:B (default 2:8)");
    cert->add_option("--theta", opt.theta, "Theta grid (default linspace:0:0.999:1000)");
    cert->add_flag("--linear-tail", opt.linear_tail, "Use linear instead of wrapped outcome distance");
    cert->add_flag("--avoid-exact", opt.avoid_exact, "Nudge grid points by +1e-12");
    add_output(cert);

    auto *scale = app.add_subcommand("scaling", "Interval width, coverage and RMSE versus clock count");
    scale->add_option("--n-range", opt.n_range, "A:B (default 5:10)");
    scale->add_option("--theta", opt.theta, "Phase fraction (default 0.3)");
    scale->add_option("--gamma", opt.gamma, "Tolerance window half-width (default 6)");
    scale->add_option("--confidence", opt.confidence, "Target confidence (sets gamma)");
    scale->add_option("--trials", opt.trials, "Monte Carlo trials per point");
    scale->add_option("--seed", opt.seed, "Master seed");
    scale->add_flag("--baseline", opt.baseline, "Add two-clock baseline at matched clock count");
    add_output(scale);

    auto *base = app.add_subcommand("baseline", "Two-clock protocol RMSE versus repetitions");
    base->add_option("--theta", opt.theta, "Phase fraction in [0, 1/2] (default 0.2)");
    base->add_option("--repetitions", opt.repetitions, "Comma-separated pair counts K");
    base->add_option("--trials", opt.trials, "Monte Carlo trials per K");
    base->add_option("--seed", opt.seed, "Master seed");
    add_output(base);

    auto *oracle = app.add_subcommand("oracle-check", "Physical-clock simulation versus effective state");
    oracle->add_option("--n-range", opt.n_range, "A:B within 1:3 (default 1:3)");
    oracle->add_option("--trials", opt.scenarios, "Random scenarios per n (default 100)");
    oracle->add_option("--seed", opt.seed, "Scenario seed");
    add_output(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInvalidConfig;
    }

    try {
        if (*dist) {
            return cmd_distribution(opt);
        }
        if (*est) {
            return cmd_estimate(opt);
        }
        if (*cert) {
            return cmd_certify(opt);
        }
        if (*scale) {
            return cmd_scaling(opt);
        }
        if (*base) {
            return cmd_baseline(opt);
        }
        if (*oracle) {
            return cmd_oracle(opt);
        }
    } catch (const eqc::ConfigError &e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const eqc::LeakageError &e) {
        std::cerr << "oracle check failed: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

// Command-line driver: single solves, power-cap sweeps, method comparisons
// on random scenarios, and a built-in self-check suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aerojam/baselines.hpp"
#include "aerojam/errors.hpp"
#include "aerojam/planner.hpp"
#include "aerojam/rng.hpp"

namespace {

using namespace aerojam;

constexpr std::uint64_t kSeedOverrideSalt = 0x636C69736565644DULL;
constexpr std::uint64_t kTestBatchSalt = 0x746573746261746BULL;
constexpr std::uint64_t kTrialSalt = 0x747269616C313233ULL;

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double elapsed_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PlanResult run_method(const Scenario& scenario, const std::string& method, int mc_samples) {
    if (method == "proposed") {
        PlannerOptions options;
        options.reporting_samples = mc_samples;
        return solve(scenario, options);
    }
    BaselineOptions options;
    options.reporting_samples = mc_samples;
    if (method == "joint12d") return solve_joint_12d(scenario, options);
    return solve_conventional(scenario, options);
}

// Held-out evaluation: fresh jitter draws from a disjoint seed stream, true
// eavesdropper positions instead of the estimates the solvers saw.
McEstimate evaluate_on_test_batch(const Scenario& scenario, const PlanResult& result,
                                  int samples) {
    JitterModel model = scenario.jitter;
    model.sample_count = samples;
    model.seed = splitmix64(scenario.seeds.mc ^ kTestBatchSalt);
    const JitterBatch batch = draw_batch(model);
    return expected_secrecy(result.info_pose, result.jam_pose, result.radio,
                            scenario.user_position, scenario.eaves_true, batch,
                            /*clamped=*/true);
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

int run_solve(const std::string& scenario_path, const std::string& method, int mc_samples,
              std::optional<std::uint64_t> seed, const std::string& out_path) {
    Scenario scenario = load_scenario(scenario_path);
    if (seed) {
        scenario.seeds.optimizer = *seed;
        scenario.seeds.mc = splitmix64(*seed ^ kSeedOverrideSalt);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const PlanResult result = run_method(scenario, method, mc_samples);
    const RunRecord record = make_record(method, scenario, result, elapsed_seconds(t0));
    if (!out_path.empty()) save_record(record, out_path);
    std::cout << "method: " << method << "\n"
              << "expected secrecy: " << fmt_real(result.expected_secrecy) << " +- "
              << fmt_real(result.std_err) << " bits/s\n"
              << "p_info: " << fmt_real(record.p_info) << " W, p_jam: " << fmt_real(record.p_jam)
              << " W\n";
    return 0;
}

int run_sweep(const std::string& scenario_path, double pmin, double pmax, int steps,
              const std::vector<std::string>& methods, const std::string& out_path) {
    const Scenario base = load_scenario(scenario_path);
    std::ofstream out(out_path);
    if (!out) throw ScenarioError("cannot write sweep output: " + out_path);
    out << "p_max_watts,method,expected_secrecy_bps,std_err_bps,p_info,p_jam,seed\n";
    for (int k = 0; k < steps; ++k) {
        // endpoint-exact uniform grid
        const double p_cap =
            ((steps - 1 - k) * pmin + k * pmax) / static_cast<double>(steps - 1);
        for (const std::string& method : methods) {
            Scenario scenario = base;
            scenario.power_cap = p_cap;
            const PlanResult result = run_method(scenario, method, 8192);
            out << fmt_real(p_cap) << ',' << method << ','
                << fmt_real(result.expected_secrecy) << ',' << fmt_real(result.std_err) << ','
                << fmt_real(result.radio.power_info) << ','
                << fmt_real(result.radio.power_jam) << ',' << scenario.seeds.scenario << "\n";
        }
    }
    std::cout << "wrote " << out_path << " (" << steps << " grid points x " << methods.size()
              << " methods)\n";
    return 0;
}

int run_compare(int trials, int n_eaves, std::uint64_t seed, double jitter_std,
                double estimate_noise, const std::string& out_path) {
    const std::vector<std::string> methods = {"proposed", "joint12d", "conventional"};
    std::vector<std::vector<double>> test_values(methods.size());
    std::vector<std::vector<double>> test_errs(methods.size());

    std::ofstream out;
    if (!out_path.empty()) {
        out.open(out_path);
        if (!out) throw ScenarioError("cannot write compare output: " + out_path);
        // value_bps is the held-out test estimate; train_value_bps is the
        // solver's own report, kept so the batch separation stays auditable
        out << "kind,trial,method,value_bps,std_err_bps,train_value_bps\n";
    }

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed =
            splitmix64(seed ^ (kTrialSalt + static_cast<std::uint64_t>(t)));
        Scenario scenario = generate_random_scenario(n_eaves, trial_seed, estimate_noise);
        scenario.jitter.sigma_info = jitter_std;
        scenario.jitter.sigma_jam = jitter_std;
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            const PlanResult result = run_method(scenario, methods[mi], 8192);
            const McEstimate test = evaluate_on_test_batch(scenario, result, 8192);
            test_values[mi].push_back(test.mean);
            test_errs[mi].push_back(test.std_err);
            if (out)
                out << "trial," << t << ',' << methods[mi] << ',' << fmt_real(test.mean) << ','
                    << fmt_real(test.std_err) << ',' << fmt_real(result.expected_secrecy)
                    << "\n";
        }
    }

    std::cout << "per-method median expected secrecy over " << trials << " trial(s):\n";
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const double med = median(test_values[mi]);
        std::cout << "  " << methods[mi] << ": " << fmt_real(med) << " bits/s\n";
        if (out) out << "median,," << methods[mi] << ',' << fmt_real(med) << ",,\n";
    }

    auto win_rate = [&](std::size_t a, std::size_t b) {
        int wins = 0;
        for (int t = 0; t < trials; ++t) {
            const double margin = 3.0 * std::sqrt(test_errs[a][static_cast<std::size_t>(t)] *
                                                      test_errs[a][static_cast<std::size_t>(t)] +
                                                  test_errs[b][static_cast<std::size_t>(t)] *
                                                      test_errs[b][static_cast<std::size_t>(t)]);
            if (test_values[a][static_cast<std::size_t>(t)] >
                test_values[b][static_cast<std::size_t>(t)] + margin)
                ++wins;
        }
        return static_cast<double>(wins) / trials;
    };
    const double wr_conventional = win_rate(0, 2);
    const double wr_joint = win_rate(0, 1);
    std::cout << "proposed beats conventional in " << fmt_real(wr_conventional)
              << " of trials, joint12d in " << fmt_real(wr_joint) << "\n";
    if (out) {
        out << "winrate,,proposed_vs_conventional," << fmt_real(wr_conventional) << ",,\n";
        out << "winrate,,proposed_vs_joint12d," << fmt_real(wr_joint) << ",,\n";
    }
    return 0;
}

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

int run_validate(bool corrupt_gain) {
    using GainFn = std::function<double(double)>;
    const GainFn true_gain = [](double c) { return antenna_gain(c); };
    // test fixture: deliberately wrong pattern to exercise the failure path
    const GainFn broken_gain = [](double c) { return 1.0 - c; };
    const GainFn gain = corrupt_gain ? broken_gain : true_gain;

    std::vector<CheckResult> checks;

    {
        Rng rng(11);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const EulerAngles a{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                rng.uniform(-3.0, 3.0)};
            worst = std::max(worst, std::abs(orientation_vector(a).norm() - 1.0));
        }
        checks.push_back({"orientation_vector_unit_norm", worst <= 1e-12,
                          "max norm deviation " + fmt_real(worst)});
    }
    {
        const double quarter = std::cos(std::numbers::pi / 4.0);
        bool ok = std::abs(gain(1.0) - 0.0) <= 1e-15 && std::abs(gain(0.0) - 1.0) <= 1e-15 &&
                  std::abs(gain(quarter) - 0.5) <= 1e-15;
        Rng rng(12);
        for (int i = 0; ok && i < 1000; ++i) {
            const double g = gain(rng.uniform(-1.0, 1.0));
            ok = g >= 0.0 && g <= 1.0;
        }
        checks.push_back({"antenna_gain", ok, ok ? "pattern values and range" : "pattern broken"});
    }
    {
        Rng rng(13);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            Vec3 axis{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
            const double n = axis.norm();
            if (n < 1e-9) continue;
            axis = axis / n;
            const Vec3 direction =
                Vec3{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
            const double dn = direction.norm();
            if (dn < 1e-9) continue;
            const double c = dot(direction / dn, axis);
            worst = std::max(worst, std::abs(antenna_gain(c) - antenna_gain(-c)));
        }
        checks.push_back(
            {"gain_sign_invariance", worst == 0.0, "max asymmetry " + fmt_real(worst)});
    }
    {
        Rng rng(14);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            Vec3 v{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
            const double n = v.norm();
            if (n < 1e-9 || std::abs(v.y / n) > 1.0 - 1e-6) {
                --i;
                continue;
            }
            v = canonicalize_axis(v / n);
            const Vec3 back = orientation_vector(angles_from_axis(v));
            worst = std::max(worst, (back - v).norm());
        }
        checks.push_back(
            {"orientation_round_trip", worst <= 1e-9, "max round-trip error " + fmt_real(worst)});
    }
    {
        Rng rng(15);
        double worst_rel = 0.0;
        for (int s = 0; s < 5; ++s) {
            const int n = 1 + static_cast<int>(rng.next_u64() % 7);
            std::vector<Vec3> eaves;
            for (int j = 0; j < n; ++j)
                eaves.push_back({rng.uniform(-500.0, 500.0), rng.uniform(-500.0, 500.0), 0.0});
            const auto [line, value] = line_maximin(eaves);
            double grid_best = 0.0;
            const int grid = 100000;
            for (int i = 0; i <= grid; ++i) {
                const double nu =
                    -std::numbers::pi / 2.0 +
                    (static_cast<double>(i) / grid) * std::numbers::pi;
                const GroundLine l(nu);
                double worst_h = std::numeric_limits<double>::infinity();
                for (const auto& p : eaves) {
                    const double h = l.distance_to(p);
                    worst_h = std::min(worst_h, h * h);
                }
                grid_best = std::max(grid_best, worst_h);
            }
            if (grid_best > 0.0)
                worst_rel = std::max(worst_rel, std::abs(value - grid_best) / grid_best);
        }
        checks.push_back({"maximin_grid_oracle", worst_rel <= 1e-3,
                          "max relative gap " + fmt_real(worst_rel)});
    }
    {
        Rng rng(16);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Vec3 jam{rng.uniform(-500.0, 500.0), rng.uniform(-500.0, 500.0),
                           rng.uniform(80.0, 300.0)};
            const EulerAngles angles = jam_orientation(jam, Vec3::zero());
            worst = std::max(
                worst, antenna_gain(elevation_cosine(jam, angles, Vec3::zero())));
        }
        checks.push_back({"jammer_null", worst <= 1e-12, "max gain at user " + fmt_real(worst)});
    }
    {
        Rng rng(17);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const int n = 1 + static_cast<int>(rng.next_u64() % 7);
            std::vector<Vec3> eaves;
            for (int j = 0; j < n; ++j)
                eaves.push_back({rng.uniform(-500.0, 500.0), rng.uniform(-500.0, 500.0), 0.0});
            const Vec3 info{rng.uniform(-500.0, 500.0), rng.uniform(-500.0, 500.0),
                            rng.uniform(80.0, 300.0)};
            const auto [line, value] = line_maximin(eaves);
            const EulerAngles angles = info_orientation(info, line);
            worst = std::max(
                worst,
                std::abs(antenna_gain(elevation_cosine(info, angles, Vec3::zero())) - 1.0));
        }
        checks.push_back(
            {"info_gain_toward_user", worst <= 1e-9, "max gain deficit " + fmt_real(worst)});
    }
    {
        const Scenario s = generate_random_scenario(2, 99, 0.0);
        const auto [line, value] = line_maximin(s.eaves_estimated);
        const Vec3 info_p{120.0, -40.0, 150.0};
        const Vec3 jam_p{-200.0, 90.0, 110.0};
        const Pose info{info_p, info_orientation(info_p, line)};
        const Pose jam{jam_p, jam_orientation(jam_p, Vec3::zero())};
        const RadioParams radio = s.make_radio(0.9, 0.7);
        const JitterBatch batch = draw_batch({0.0, 0.0, 64, 5});
        const McEstimate mc =
            expected_secrecy(info, jam, radio, Vec3::zero(), s.eaves_estimated, batch, true);
        SinrVector sv;
        sv.gamma_user = sinr_at_node(info, info.desired_orientation, jam,
                                     jam.desired_orientation, Vec3::zero(), radio, 0);
        for (std::size_t j = 0; j < s.eaves_estimated.size(); ++j)
            sv.gamma_eaves.push_back(sinr_at_node(info, info.desired_orientation, jam,
                                                  jam.desired_orientation, s.eaves_estimated[j],
                                                  radio, static_cast<int>(j + 1)));
        const double direct = secrecy_rate(sv, radio.bandwidth);
        const bool ok = mc.mean == direct && mc.std_err == 0.0;
        checks.push_back({"zero_jitter_degeneracy", ok,
                          ok ? "estimate equals deterministic rate"
                             : "mismatch " + fmt_real(mc.mean - direct)});
    }

    bool all_ok = true;
    for (const CheckResult& c : checks) {
        std::cout << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        all_ok = all_ok && c.passed;
    }
    std::cout << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pose and power planning for a two-drone transmitter/jammer team"};
    app.require_subcommand(1);

    const std::vector<std::string> known_methods = {"proposed", "joint12d", "conventional"};

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Run one method on one scenario file");
    std::string solve_scenario;
    std::string solve_method = "proposed";
    int solve_mc_samples = 8192;
    std::optional<std::uint64_t> solve_seed;
    std::string solve_out;
    solve_cmd->add_option("--scenario", solve_scenario, "Scenario JSON file")->required();
    solve_cmd->add_option("--method", solve_method, "proposed|joint12d|conventional")
        ->check(CLI::IsMember(known_methods));
    solve_cmd->add_option("--mc-samples", solve_mc_samples, "Reporting batch size")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--seed", solve_seed,
                          "Override the optimizer/Monte Carlo seed streams");
    solve_cmd->add_option("--out", solve_out, "Write the run record JSON here");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the power cap over a uniform grid");
    std::string sweep_scenario;
    double sweep_pmin = 0.1;
    double sweep_pmax = 1.1;
    int sweep_steps = 11;
    std::vector<std::string> sweep_methods = {"proposed"};
    std::string sweep_out;
    sweep_cmd->add_option("--scenario", sweep_scenario, "Scenario JSON file")->required();
    sweep_cmd->add_option("--pmin", sweep_pmin, "Lowest power cap, W");
    sweep_cmd->add_option("--pmax", sweep_pmax, "Highest power cap, W");
    sweep_cmd->add_option("--steps", sweep_steps, "Grid points (>= 2)");
    sweep_cmd->add_option("--methods", sweep_methods, "Comma-separated method list")
        ->delimiter(',')
        ->check(CLI::IsMember(known_methods));
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

    // compare
    auto* compare_cmd =
        app.add_subcommand("compare", "Run all methods on seeded random scenarios");
    int compare_trials = 20;
    int compare_n_eaves = 2;
    std::uint64_t compare_seed = 1;
    double compare_jitter_std = 0.0;
    double compare_estimate_noise = 0.0;
    std::string compare_out;
    compare_cmd->add_option("--trials", compare_trials, "Number of random scenarios")
        ->check(CLI::PositiveNumber);
    compare_cmd->add_option("--n-eaves", compare_n_eaves, "Eavesdroppers per scenario")
        ->check(CLI::PositiveNumber);
    compare_cmd->add_option("--seed", compare_seed, "Base seed for scenario generation");
    compare_cmd->add_option("--jitter-std", compare_jitter_std,
                            "Orientation jitter std, rad (train and test)");
    compare_cmd->add_option("--estimate-noise", compare_estimate_noise,
                            "Eavesdropper position estimate noise std, m");
    compare_cmd->add_option("--out", compare_out, "Output CSV path");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Run the built-in property checks");
    bool corrupt_gain = false;
    validate_cmd->add_flag("--corrupt-gain", corrupt_gain, "")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(solve_scenario, solve_method, solve_mc_samples, solve_seed,
                             solve_out);
        if (sweep_cmd->parsed()) {
            if (sweep_steps < 2 || !(sweep_pmin > 0.0) || !(sweep_pmin <= sweep_pmax)) {
                std::cerr << "sweep: need steps >= 2 and 0 < pmin <= pmax\n"
                          << sweep_cmd->help();
                return 2;
            }
            return run_sweep(sweep_scenario, sweep_pmin, sweep_pmax, sweep_steps, sweep_methods,
                             sweep_out);
        }
        if (compare_cmd->parsed())
            return run_compare(compare_trials, compare_n_eaves, compare_seed, compare_jitter_std,
                               compare_estimate_noise, compare_out);
        if (validate_cmd->parsed()) return run_validate(corrupt_gain);
    } catch (const ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

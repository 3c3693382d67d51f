// Acceptance suite: ten release criteria, one PASS/FAIL line each. Run with
// no arguments for the full suite or with a list of criterion numbers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "aerojam/baselines.hpp"
#include "aerojam/errors.hpp"
#include "aerojam/planner.hpp"
#include "aerojam/rng.hpp"

using namespace aerojam;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kTestBatchSalt = 0x746573746261746BULL;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double gain_toward(const Vec3& from, const EulerAngles& angles, const Vec3& target) {
    return antenna_gain(elevation_cosine(from, angles, target));
}

// held-out evaluation: fresh jitter stream, true eavesdropper positions
McEstimate test_evaluation(const Scenario& scenario, const PlanResult& result, int samples) {
    JitterModel model = scenario.jitter;
    model.sample_count = samples;
    model.seed = splitmix64(scenario.seeds.mc ^ kTestBatchSalt);
    const JitterBatch batch = draw_batch(model);
    return expected_secrecy(result.info_pose, result.jam_pose, result.radio,
                            scenario.user_position, scenario.eaves_true, batch, true);
}

// ---------------------------------------------------------------- criteria

bool criterion_gain_identity(std::string& detail) {
    Rng rng(71001);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 7);
        const Scenario s =
            generate_random_scenario(n, static_cast<std::uint64_t>(10000 + i), 0.0);
        const Vec3 position{rng.uniform(-500, 500), rng.uniform(-500, 500),
                            rng.uniform(80, 300)};
        const auto [line, value] = line_maximin(s.eaves_estimated);
        const EulerAngles angles = info_orientation(position, line);
        worst = std::max(worst, std::abs(gain_toward(position, angles, Vec3::zero()) - 1.0));
    }
    detail = "max |gain - 1| = " + fmt(worst) + " over 200 scenarios";
    return worst <= 1e-9;
}

bool criterion_jammer_null(std::string& detail) {
    Rng rng(71002);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Vec3 position{rng.uniform(-500, 500), rng.uniform(-500, 500),
                            rng.uniform(80, 300)};
        const EulerAngles angles = jam_orientation(position, Vec3::zero());
        worst = std::max(worst, gain_toward(position, angles, Vec3::zero()));
    }
    detail = "max jam gain at user = " + fmt(worst) + " over 200 positions";
    return worst <= 1e-12;
}

bool criterion_maximin_oracle(std::string& detail) {
    constexpr int kGrid = 1000000;
    static std::vector<double> wx(kGrid + 1);
    static std::vector<double> wy(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) {
        const double nu = -kPi / 2.0 + (static_cast<double>(i) / kGrid) * kPi;
        wx[static_cast<std::size_t>(i)] = -std::sin(nu);
        wy[static_cast<std::size_t>(i)] = std::cos(nu);
    }
    Rng rng(71003);
    double worst_rel = 0.0;
    for (int s = 0; s < 100; ++s) {
        const int n = 1 + s % 7;
        std::vector<Vec3> eaves;
        for (int j = 0; j < n; ++j)
            eaves.push_back({rng.uniform(-500, 500), rng.uniform(-500, 500), 0.0});
        const auto [line, value] = line_maximin(eaves);
        double grid_best = 0.0;
        for (int i = 0; i <= kGrid; ++i) {
            double worst_h = std::numeric_limits<double>::infinity();
            for (const Vec3& p : eaves) {
                const double h = wx[static_cast<std::size_t>(i)] * p.x +
                                 wy[static_cast<std::size_t>(i)] * p.y;
                worst_h = std::min(worst_h, h * h);
            }
            grid_best = std::max(grid_best, worst_h);
        }
        if (grid_best > 0.0)
            worst_rel = std::max(worst_rel, std::abs(value - grid_best) / grid_best);
    }
    detail = "max relative gap vs 1e6-point grid = " + fmt(worst_rel) + " over 100 scenarios";
    return worst_rel <= 1e-3;
}

bool criterion_round_trip(std::string& detail) {
    Rng rng(71004);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec3 v{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
        const double n = v.norm();
        if (n < 1e-9 || std::abs(v.y / n) > 1.0 - 1e-6) {
            --i;
            continue;
        }
        v = canonicalize_axis(v / n);
        worst = std::max(worst, (orientation_vector(angles_from_axis(v)) - v).norm());
    }
    detail = "max round-trip error = " + fmt(worst) + " over 1000 axes";
    return worst <= 1e-9;
}

bool criterion_zero_jitter(std::string& detail) {
    Rng rng(71005);
    int mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const Scenario s =
            generate_random_scenario(1 + static_cast<int>(rng.next_u64() % 4),
                                     static_cast<std::uint64_t>(20000 + i), 0.0);
        const Pose info{{rng.uniform(-400, 400), rng.uniform(-400, 400), rng.uniform(80, 300)},
                        {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), 0.0}};
        const Pose jam{{rng.uniform(-400, 400), rng.uniform(-400, 400), rng.uniform(80, 300)},
                       {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), 0.0}};
        const RadioParams radio = s.make_radio(rng.uniform(0.1, 1.1), rng.uniform(0.0, 1.1));
        const JitterBatch batch =
            draw_batch({0.0, 0.0, 256, static_cast<std::uint64_t>(i)});
        const McEstimate mc =
            expected_secrecy(info, jam, radio, Vec3::zero(), s.eaves_estimated, batch, true);

        SinrVector sinr;
        sinr.gamma_user = sinr_at_node(info, info.desired_orientation, jam,
                                       jam.desired_orientation, Vec3::zero(), radio, 0);
        for (std::size_t j = 0; j < s.eaves_estimated.size(); ++j)
            sinr.gamma_eaves.push_back(
                sinr_at_node(info, info.desired_orientation, jam, jam.desired_orientation,
                             s.eaves_estimated[j], radio, static_cast<int>(j + 1)));
        const double direct = secrecy_rate(sinr, radio.bandwidth);
        if (mc.mean != direct || mc.std_err != 0.0) ++mismatches;
    }
    detail = std::to_string(mismatches) + " bitwise mismatches over 50 configurations";
    return mismatches == 0;
}

bool criterion_mc_scaling(std::string& detail) {
    const Scenario s = generate_random_scenario(2, 30001, 0.0);
    const auto [line, value] = line_maximin(s.eaves_estimated);
    const Vec3 info_p{150.0, -90.0, 140.0};
    const Vec3 jam_p{-220.0, 160.0, 120.0};
    const Pose info{info_p, info_orientation(info_p, line)};
    const Pose jam{jam_p, jam_orientation(jam_p, Vec3::zero())};
    const RadioParams radio = s.make_radio(1.0, 0.8);

    const int m = 512;
    double se_small = 0.0;
    double se_large = 0.0;
    for (int r = 0; r < 50; ++r) {
        const auto seed = static_cast<std::uint64_t>(40000 + r);
        const JitterBatch small = draw_batch({0.05, 0.05, m, seed});
        const JitterBatch large = draw_batch({0.05, 0.05, 4 * m, splitmix64(seed)});
        se_small += expected_secrecy(info, jam, radio, Vec3::zero(), s.eaves_estimated, small,
                                     true)
                        .std_err;
        se_large += expected_secrecy(info, jam, radio, Vec3::zero(), s.eaves_estimated, large,
                                     true)
                        .std_err;
    }
    const double ratio = se_small / se_large;
    detail = "mean std-err ratio (M vs 4M) = " + fmt(ratio) + " over 50 repetitions";
    return ratio >= 1.5 && ratio <= 2.5;
}

struct TrialValues {
    std::vector<double> proposed, joint, conventional;
    std::vector<double> proposed_err, joint_err, conventional_err;
};

TrialValues run_trials(int trials, std::uint64_t seed_base, double jitter_std,
                       double estimate_noise) {
    TrialValues out;
    for (int t = 0; t < trials; ++t) {
        Scenario s = generate_random_scenario(
            2, splitmix64(seed_base + static_cast<std::uint64_t>(t)), estimate_noise);
        s.jitter.sigma_info = jitter_std;
        s.jitter.sigma_jam = jitter_std;

        const PlanResult p = solve(s);
        const PlanResult j = solve_joint_12d(s);
        const PlanResult c = solve_conventional(s);
        const McEstimate pt = test_evaluation(s, p, 8192);
        const McEstimate jt = test_evaluation(s, j, 8192);
        const McEstimate ct = test_evaluation(s, c, 8192);
        out.proposed.push_back(pt.mean);
        out.joint.push_back(jt.mean);
        out.conventional.push_back(ct.mean);
        out.proposed_err.push_back(pt.std_err);
        out.joint_err.push_back(jt.std_err);
        out.conventional_err.push_back(ct.std_err);
    }
    return out;
}

bool criterion_method_ordering(std::string& detail) {
    const TrialValues v = run_trials(20, 50001, 0.0, 0.0);
    const double mp = median(v.proposed);
    const double mj = median(v.joint);
    const double mc = median(v.conventional);
    int wins = 0;
    for (std::size_t t = 0; t < v.proposed.size(); ++t) {
        const double margin =
            3.0 * std::sqrt(v.proposed_err[t] * v.proposed_err[t] +
                            v.conventional_err[t] * v.conventional_err[t]);
        if (v.proposed[t] > v.conventional[t] + margin) ++wins;
    }
    const double win_rate = static_cast<double>(wins) / static_cast<double>(v.proposed.size());
    detail = "medians (bits/s): proposed=" + fmt(mp) + " joint12d=" + fmt(mj) +
             " conventional=" + fmt(mc) + "; win rate vs conventional=" + fmt(win_rate);
    return mp >= mj && mj >= mc && win_rate >= 0.8;
}

bool criterion_power_monotonicity(std::string& detail) {
    Scenario s = generate_random_scenario(2, 60001, 0.0);
    s.power_cap = 0.1;
    const PlanResult low = solve(s);
    s.power_cap = 1.1;
    const PlanResult high = solve(s);
    const double slack =
        3.0 * std::sqrt(low.std_err * low.std_err + high.std_err * high.std_err);
    detail = "secrecy at 1.1 W = " + fmt(high.expected_secrecy) + ", at 0.1 W = " +
             fmt(low.expected_secrecy) + ", slack = " + fmt(slack);
    return high.expected_secrecy >= low.expected_secrecy - slack;
}

bool criterion_robustness(std::string& detail) {
    const TrialValues jittered = run_trials(20, 70001, 0.05, 0.0);
    const double jp = median(jittered.proposed);
    const double jj = median(jittered.joint);
    const double jc = median(jittered.conventional);

    const TrialValues uncertain = run_trials(20, 80001, 0.0, 50.0);
    const double up = median(uncertain.proposed);
    const double uj = median(uncertain.joint);
    const double uc = median(uncertain.conventional);

    detail = "jitter medians: p=" + fmt(jp) + " j=" + fmt(jj) + " c=" + fmt(jc) +
             "; uncertainty medians: p=" + fmt(up) + " j=" + fmt(uj) + " c=" + fmt(uc);
    return jp >= jj && jp >= jc && up >= uj && up >= uc;
}

bool criterion_brute_force(std::string& detail) {
    Scenario s = generate_random_scenario(1, 90001, 0.0);
    s.eaves_true = {{330.0, -270.0, 0.0}};
    s.eaves_estimated = s.eaves_true;
    s.power_cap = 1.0;

    const auto [line, value] = line_maximin(s.eaves_estimated);
    const JitterBatch zero = draw_batch({0.0, 0.0, 1, 0});
    RadioParams radio = s.make_radio(0.0, 0.0);

    Rng rng(71010);
    double brute_best = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const Vec3 info_p{rng.uniform(-500, 500), rng.uniform(-500, 500),
                          rng.uniform(80, 300)};
        const Vec3 jam_p{rng.uniform(-500, 500), rng.uniform(-500, 500), rng.uniform(80, 300)};
        radio.power_info = rng.uniform(0.0, s.power_cap);
        radio.power_jam = rng.uniform(0.0, s.power_cap);
        const Pose info{info_p, info_orientation(info_p, line)};
        const Pose jam{jam_p, jam_orientation(jam_p, Vec3::zero())};
        brute_best = std::max(
            brute_best,
            expected_secrecy(info, jam, radio, Vec3::zero(), s.eaves_estimated, zero, true)
                .mean);
    }

    const PlanResult r = solve(s);
    detail = "solver = " + fmt(r.expected_secrecy) + " bits/s vs brute-force best = " +
             fmt(brute_best) + " (1e5 samples)";
    return r.expected_secrecy > 0.0 && r.expected_secrecy >= 0.95 * brute_best;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
    double budget_seconds;  // 0 = no stated budget
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "gain-toward-user identity", criterion_gain_identity, 5.0},
        {2, "jammer null", criterion_jammer_null, 5.0},
        {3, "maximin grid oracle", criterion_maximin_oracle, 60.0},
        {4, "orientation round trip", criterion_round_trip, 1.0},
        {5, "zero-jitter degeneracy", criterion_zero_jitter, 0.0},
        {6, "monte carlo scaling", criterion_mc_scaling, 120.0},
        {7, "method ordering", criterion_method_ordering, 1800.0},
        {8, "power-cap monotonicity", criterion_power_monotonicity, 300.0},
        {9, "robustness ordering", criterion_robustness, 3600.0},
        {10, "brute-force sanity", criterion_brute_force, 600.0},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
            ok = false;
            detail += " [over the " + fmt(c.budget_seconds) + " s budget]";
        }
        std::printf("[%s] %02d %s (%.2f s): %s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aerojam/jitter.hpp"

namespace aerojam {

struct Seeds {
    std::uint64_t scenario = 0;
    std::uint64_t optimizer = 0;
    std::uint64_t mc = 0;
};

// One planning problem: the active user, the eavesdroppers (true positions
// for evaluation, estimated positions for the solvers), the flight box and
// radio parameters. All ground nodes sit at z = 0.
struct Scenario {
    Vec3 user_position;
    std::vector<Vec3> eaves_true;
    std::vector<Vec3> eaves_estimated;  // same length as eaves_true
    double area_half_extent = 500.0;    // horizontal box around the user, m
    double z_min = 80.0;                // m
    double z_max = 300.0;               // m
    double power_cap = 1.1;             // W
    double noise_user = 1e-12;          // W
    double noise_eaves = 1e-12;         // W
    double bandwidth = 1e6;             // Hz
    JitterModel jitter;                 // sample_count = inner-loop batch size
    Seeds seeds;

    std::size_t eaves_count() const { return eaves_true.size(); }

    // Radio parameter block with the per-node noise vector laid out as
    // [user, eave_1, ..., eave_N].
    RadioParams make_radio(double p_info, double p_jam) const;

    // Stable hex digest of the canonical rendering (fixed field order, 17
    // significant digits); identical across platforms.
    std::string digest() const;

    void validate() const;  // throws ValidationError
};

// Same scenario translated so the user sits at the origin.
Scenario recenter_to_user(const Scenario& scenario);

// User at the origin, true eavesdropper positions uniform over the area box,
// estimated positions = true + 2-D Gaussian offsets of the given std
// (0 = perfect knowledge). Radio fields take the defaults above.
Scenario generate_random_scenario(int n_eaves, std::uint64_t seed, double estimate_noise_std);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

// Flattened result of one solver run, ready for serialization.
struct RunRecord {
    std::string method;
    std::string scenario_digest;
    double expected_secrecy_bps = 0.0;
    double std_err_bps = 0.0;
    double p_info = 0.0;
    double p_jam = 0.0;
    Vec3 info_position;
    EulerAngles info_rpy;
    Vec3 jam_position;
    EulerAngles jam_rpy;
    std::optional<double> line_nu;  // proposed pipeline only
    int iterations = 0;
    bool converged = false;
    std::vector<double> trace;
    double duration_seconds = 0.0;
};

RunRecord load_record(const std::filesystem::path& path);
void save_record(const RunRecord& record, const std::filesystem::path& path);

}  // namespace aerojam

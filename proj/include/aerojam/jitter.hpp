#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aerojam/channel.hpp"

namespace aerojam {

// Zero-mean Gaussian orientation disturbance, one sigma per drone.
struct JitterModel {
    double sigma_info = 0.0;  // rad
    double sigma_jam = 0.0;   // rad
    int sample_count = 512;
    std::uint64_t seed = 0;
};

// Per-sample roll/pitch disturbances for both drones. Yaw jitter is not
// sampled: the dipole pattern is symmetric about its axis, so yaw never
// changes any gain.
struct JitterBatch {
    double sigma_info = 0.0;
    double sigma_jam = 0.0;
    std::vector<double> roll_info;
    std::vector<double> pitch_info;
    std::vector<double> roll_jam;
    std::vector<double> pitch_jam;

    std::size_t size() const { return roll_info.size(); }
};

// Deterministic for a fixed (seed, sample_count, sigmas).
JitterBatch draw_batch(const JitterModel& model);

struct McEstimate {
    double mean = 0.0;
    double std_err = 0.0;  // sample std / sqrt(M)
};

// Sample mean and standard error of the secrecy rate under orientation
// jitter: each batch row perturbs the desired roll/pitch of both drones.
// clamped=false swaps in the sign-preserving utility. With both sigmas zero
// the result is exactly the deterministic rate (std_err 0).
McEstimate expected_secrecy(const Pose& info_pose, const Pose& jam_pose, const RadioParams& radio,
                            const Vec3& user_position, std::span<const Vec3> eaves_positions,
                            const JitterBatch& batch, bool clamped);

}  // namespace aerojam

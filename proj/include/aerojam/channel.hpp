#pragma once

#include <vector>

#include "aerojam/geometry.hpp"

namespace aerojam {

struct RadioParams {
    double power_info = 0.0;    // W
    double power_jam = 0.0;     // W
    std::vector<double> noise;  // AWGN variance per node, W; index 0 = user
    double bandwidth = 1e6;     // Hz
    double power_cap = 1.1;     // W
};

struct SinrVector {
    double gamma_user = 0.0;
    std::vector<double> gamma_eaves;  // computed at estimated positions
};

// SINR at one node under pure inverse-square path loss, with both dipole
// patterns evaluated at the realized (jittered) orientations.
double sinr_at_node(const Pose& info_pose, const EulerAngles& info_realized,
                    const Pose& jam_pose, const EulerAngles& jam_realized,
                    const Vec3& node_position, const RadioParams& radio, int node_index);

// Secrecy rate in bits/s: bandwidth-scaled positive part of the user rate
// minus the best eavesdropper rate.
double secrecy_rate(const SinrVector& sinr, double bandwidth);

// Same without the clamp at zero; used inside the optimizer where the flat
// valleys of the clamped rate would hide descent directions.
double utility_unclamped(const SinrVector& sinr, double bandwidth);

namespace detail {

// SINR with precomputed antenna axes; hot path for the Monte Carlo loop.
double sinr_given_axes(const Vec3& info_position, const Vec3& info_axis, double power_info,
                       const Vec3& jam_position, const Vec3& jam_axis, double power_jam,
                       const Vec3& node, double noise_variance);

}  // namespace detail

}  // namespace aerojam

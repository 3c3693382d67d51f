#include "aerojam/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aerojam/errors.hpp"

namespace aerojam {

namespace detail {

double sinr_given_axes(const Vec3& info_position, const Vec3& info_axis, double power_info,
                       const Vec3& jam_position, const Vec3& jam_axis, double power_jam,
                       const Vec3& node, double noise_variance) {
    const Vec3 di = node - info_position;
    const Vec3 dj = node - jam_position;
    const double di2 = di.norm2();
    const double dj2 = dj.norm2();
    if (!(di2 > 0.0) || !(dj2 > 0.0))
        throw DegenerateGeometryError("sinr: node coincides with a drone");
    // gain = 1 - cos^2, with cos = <d, axis> / |d|; no square roots needed
    const double ci = dot(di, info_axis);
    const double cj = dot(dj, jam_axis);
    const double gain_info = std::max(0.0, 1.0 - (ci * ci) / di2);
    const double gain_jam = std::max(0.0, 1.0 - (cj * cj) / dj2);
    return gain_info * power_info / di2 / (gain_jam * power_jam / dj2 + noise_variance);
}

}  // namespace detail

double sinr_at_node(const Pose& info_pose, const EulerAngles& info_realized,
                    const Pose& jam_pose, const EulerAngles& jam_realized,
                    const Vec3& node_position, const RadioParams& radio, int node_index) {
    if (node_index < 0 || static_cast<std::size_t>(node_index) >= radio.noise.size())
        throw std::invalid_argument("sinr_at_node: node_index out of range");
    if (radio.power_info < 0.0 || radio.power_jam < 0.0)
        throw std::invalid_argument("sinr_at_node: negative transmit power");
    const double noise = radio.noise[static_cast<std::size_t>(node_index)];
    if (!(noise > 0.0)) throw std::invalid_argument("sinr_at_node: noise variance must be > 0");
    return detail::sinr_given_axes(info_pose.position, orientation_vector(info_realized),
                                   radio.power_info, jam_pose.position,
                                   orientation_vector(jam_realized), radio.power_jam,
                                   node_position, noise);
}

double utility_unclamped(const SinrVector& sinr, double bandwidth) {
    if (sinr.gamma_eaves.empty())
        throw std::invalid_argument("utility_unclamped: at least one eavesdropper required");
    if (!(sinr.gamma_user >= 0.0) || !std::isfinite(sinr.gamma_user))
        throw std::invalid_argument("utility_unclamped: invalid user SINR");
    double worst = 0.0;  // log2(1 + gamma) >= 0, so 0 is a safe identity
    for (double g : sinr.gamma_eaves) {
        if (!(g >= 0.0) || !std::isfinite(g))
            throw std::invalid_argument("utility_unclamped: invalid eavesdropper SINR");
        worst = std::max(worst, std::log2(1.0 + g));
    }
    return bandwidth * (std::log2(1.0 + sinr.gamma_user) - worst);
}

double secrecy_rate(const SinrVector& sinr, double bandwidth) {
    return std::max(0.0, utility_unclamped(sinr, bandwidth));
}

}  // namespace aerojam

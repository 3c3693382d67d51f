#include "aerojam/jitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aerojam/errors.hpp"
#include "aerojam/rng.hpp"

namespace aerojam {

JitterBatch draw_batch(const JitterModel& model) {
    if (model.sample_count < 1)
        throw std::invalid_argument("draw_batch: sample_count must be >= 1");
    if (model.sigma_info < 0.0 || model.sigma_jam < 0.0)
        throw std::invalid_argument("draw_batch: sigma must be >= 0");
    JitterBatch batch;
    batch.sigma_info = model.sigma_info;
    batch.sigma_jam = model.sigma_jam;
    const std::size_t m = static_cast<std::size_t>(model.sample_count);
    batch.roll_info.resize(m);
    batch.pitch_info.resize(m);
    batch.roll_jam.resize(m);
    batch.pitch_jam.resize(m);
    Rng rng(model.seed);
    for (std::size_t i = 0; i < m; ++i) {
        batch.roll_info[i] = model.sigma_info * rng.next_gaussian();
        batch.pitch_info[i] = model.sigma_info * rng.next_gaussian();
        batch.roll_jam[i] = model.sigma_jam * rng.next_gaussian();
        batch.pitch_jam[i] = model.sigma_jam * rng.next_gaussian();
    }
    return batch;
}

namespace {

double rate_for_realization(const Pose& info_pose, const Pose& jam_pose, const RadioParams& radio,
                            const Vec3& user, std::span<const Vec3> eaves, double droll_info,
                            double dpitch_info, double droll_jam, double dpitch_jam,
                            bool clamped) {
    EulerAngles realized_info = info_pose.desired_orientation;
    realized_info.roll += droll_info;
    realized_info.pitch += dpitch_info;
    EulerAngles realized_jam = jam_pose.desired_orientation;
    realized_jam.roll += droll_jam;
    realized_jam.pitch += dpitch_jam;
    const Vec3 axis_info = orientation_vector(realized_info);
    const Vec3 axis_jam = orientation_vector(realized_jam);

    const double gamma_user =
        detail::sinr_given_axes(info_pose.position, axis_info, radio.power_info,
                                jam_pose.position, axis_jam, radio.power_jam, user,
                                radio.noise[0]);
    double worst = 0.0;
    for (std::size_t j = 0; j < eaves.size(); ++j) {
        const double g =
            detail::sinr_given_axes(info_pose.position, axis_info, radio.power_info,
                                    jam_pose.position, axis_jam, radio.power_jam, eaves[j],
                                    radio.noise[j + 1]);
        worst = std::max(worst, std::log2(1.0 + g));
    }
    const double utility = radio.bandwidth * (std::log2(1.0 + gamma_user) - worst);
    return clamped ? std::max(0.0, utility) : utility;
}

}  // namespace

McEstimate expected_secrecy(const Pose& info_pose, const Pose& jam_pose, const RadioParams& radio,
                            const Vec3& user_position, std::span<const Vec3> eaves_positions,
                            const JitterBatch& batch, bool clamped) {
    if (eaves_positions.empty())
        throw std::invalid_argument("expected_secrecy: at least one eavesdropper required");
    if (radio.noise.size() != eaves_positions.size() + 1)
        throw std::invalid_argument(
            "expected_secrecy: noise vector must cover the user and every eavesdropper");
    const std::size_t m = batch.size();
    if (m == 0) throw std::invalid_argument("expected_secrecy: empty batch");

    // Zero jitter collapses the distribution: return the deterministic rate
    // itself so the equality is exact, not merely up to summation rounding.
    if (batch.sigma_info == 0.0 && batch.sigma_jam == 0.0) {
        const double value = rate_for_realization(info_pose, jam_pose, radio, user_position,
                                                  eaves_positions, 0.0, 0.0, 0.0, 0.0, clamped);
        return {value, 0.0};
    }

    std::vector<double> values(m);
    for (std::size_t i = 0; i < m; ++i)
        values[i] =
            rate_for_realization(info_pose, jam_pose, radio, user_position, eaves_positions,
                                 batch.roll_info[i], batch.pitch_info[i], batch.roll_jam[i],
                                 batch.pitch_jam[i], clamped);

    // fixed left-to-right reduction keeps estimates bit-reproducible
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(m);
    if (m == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    const double sample_std = std::sqrt(ss / static_cast<double>(m - 1));
    return {mean, sample_std / std::sqrt(static_cast<double>(m))};
}

}  // namespace aerojam

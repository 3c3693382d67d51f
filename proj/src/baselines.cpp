#include "aerojam/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "aerojam/errors.hpp"
#include "aerojam/rng.hpp"

namespace aerojam {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::uint64_t kReportSeedSalt = 0x7265706F72743031ULL;

// Decision vector layout for the benchmarks:
//   [info xyz, jam xyz, info roll, info pitch, jam roll, jam pitch, P_info, P_jam]
// The conventional variant keeps the four angles pinned at zero.
struct BaselineBox {
    std::vector<double> lo;
    std::vector<double> hi;

    static BaselineBox make(const Scenario& s, bool with_angles) {
        const double a = s.area_half_extent;
        BaselineBox box;
        box.lo = {-a, -a, s.z_min, -a, -a, s.z_min};
        box.hi = {a, a, s.z_max, a, a, s.z_max};
        if (with_angles) {
            for (int k = 0; k < 4; ++k) {
                box.lo.push_back(-kHalfPi);
                box.hi.push_back(kHalfPi);
            }
        }
        box.lo.push_back(0.0);
        box.lo.push_back(0.0);
        box.hi.push_back(s.power_cap);
        box.hi.push_back(s.power_cap);
        return box;
    }

    std::vector<double> encode(std::span<const double> raw) const {
        std::vector<double> u(raw.size());
        for (std::size_t k = 0; k < raw.size(); ++k) u[k] = (raw[k] - lo[k]) / (hi[k] - lo[k]);
        return u;
    }

    std::vector<double> decode(std::span<const double> u) const {
        std::vector<double> raw(u.size());
        for (std::size_t k = 0; k < u.size(); ++k) raw[k] = lo[k] + u[k] * (hi[k] - lo[k]);
        return raw;
    }
};

PlanResult run_interior_point(const Scenario& scenario, bool with_angles,
                              const BaselineOptions& options) {
    scenario.validate();
    if (options.multi_starts < 1 || options.reporting_samples < 1)
        throw std::invalid_argument("baseline solve: starts and samples must be >= 1");
    const Vec3 offset = scenario.user_position;
    const Scenario local = recenter_to_user(scenario);
    const BaselineBox box = BaselineBox::make(local, with_angles);
    const std::size_t dim = box.lo.size();

    JitterModel inner_model = local.jitter;
    inner_model.seed = local.seeds.mc;
    const JitterBatch inner_batch = draw_batch(inner_model);

    RadioParams radio = local.make_radio(0.0, 0.0);
    const Vec3 user = Vec3::zero();
    auto decode_poses = [&](std::span<const double> raw) {
        const Vec3 info_position{raw[0], raw[1], raw[2]};
        const Vec3 jam_position{raw[3], raw[4], raw[5]};
        EulerAngles info_angles;
        EulerAngles jam_angles;
        if (with_angles) {
            info_angles = {raw[6], raw[7], 0.0};
            jam_angles = {raw[8], raw[9], 0.0};
        }
        return std::pair{Pose{info_position, info_angles}, Pose{jam_position, jam_angles}};
    };

    auto objective = [&](std::span<const double> u) -> double {
        const std::vector<double> raw = box.decode(u);
        const auto [info, jam] = decode_poses(raw);
        try {
            radio.power_info = raw[dim - 2];
            radio.power_jam = raw[dim - 1];
            return expected_secrecy(info, jam, radio, user, local.eaves_estimated, inner_batch,
                                    /*clamped=*/true)
                .mean;
        } catch (const DegenerateGeometryError&) {
            return kNegInf;
        }
    };

    BarrierOptions barrier = options.barrier;
    barrier.objective_scale = local.bandwidth;  // work in bits/s/Hz inside the barrier

    const auto starts = draw_start_points(local, options.multi_starts);
    OptResult best;
    best.value = kNegInf;
    for (const StartPoint& sp : starts) {
        std::vector<double> raw = {sp.positions_powers.info_position.x,
                                   sp.positions_powers.info_position.y,
                                   sp.positions_powers.info_position.z,
                                   sp.positions_powers.jam_position.x,
                                   sp.positions_powers.jam_position.y,
                                   sp.positions_powers.jam_position.z};
        if (with_angles) {
            raw.push_back(sp.info_angles.roll);
            raw.push_back(sp.info_angles.pitch);
            raw.push_back(sp.jam_angles.roll);
            raw.push_back(sp.jam_angles.pitch);
        }
        raw.push_back(sp.positions_powers.power_info);
        raw.push_back(sp.positions_powers.power_jam);
        const OptResult r = barrier_maximize_box(objective, box.encode(raw), barrier);
        if (r.value > best.value) best = r;
    }

    const std::vector<double> raw = box.decode(best.x);
    const auto [info_local, jam_local] = decode_poses(raw);
    radio.power_info = raw[dim - 2];
    radio.power_jam = raw[dim - 1];

    JitterModel report_model = local.jitter;
    report_model.sample_count = options.reporting_samples;
    report_model.seed = splitmix64(local.seeds.mc ^ kReportSeedSalt);
    const JitterBatch report_batch = draw_batch(report_model);
    const McEstimate estimate = expected_secrecy(info_local, jam_local, radio, user,
                                                 local.eaves_estimated, report_batch,
                                                 /*clamped=*/true);

    PlanResult result;
    result.info_pose = {info_local.position + offset, info_local.desired_orientation};
    result.jam_pose = {jam_local.position + offset, jam_local.desired_orientation};
    result.radio = radio;
    result.expected_secrecy = estimate.mean;
    result.std_err = estimate.std_err;
    result.line = std::nullopt;
    result.iterations = 1;
    result.trace = {best.value};
    result.converged = best.converged;
    return result;
}

}  // namespace

PlanResult solve_joint_12d(const Scenario& scenario, const BaselineOptions& options) {
    return run_interior_point(scenario, /*with_angles=*/true, options);
}

PlanResult solve_conventional(const Scenario& scenario, const BaselineOptions& options) {
    return run_interior_point(scenario, /*with_angles=*/false, options);
}

PlanResult solve_baseline(BaselineKind kind, const Scenario& scenario,
                          const BaselineOptions& options) {
    return kind == BaselineKind::Joint12D ? solve_joint_12d(scenario, options)
                                          : solve_conventional(scenario, options);
}

}  // namespace aerojam

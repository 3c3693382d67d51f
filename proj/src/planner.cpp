#include "aerojam/planner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "aerojam/errors.hpp"
#include "aerojam/rng.hpp"

namespace aerojam {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::uint64_t kReportSeedSalt = 0x7265706F72743031ULL;

// min_j (w(nu) . p_j)^2 over the ground projections
double maximin_value(double nu, std::span<const Vec3> eaves) {
    const double wx = -std::sin(nu);
    const double wy = std::cos(nu);
    double worst = std::numeric_limits<double>::infinity();
    for (const Vec3& p : eaves) {
        const double h = wx * p.x + wy * p.y;
        worst = std::min(worst, h * h);
    }
    return worst;
}

// golden-section maximization of a unimodal bracket
double golden_max(const std::function<double(double)>& f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < 80 && (b - a) > 1e-14; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? x1 : x2;
}

// Box for the 8 inner decision variables, in the user-centered frame:
// [info xyz, jam xyz, P_info, P_jam].
struct InnerBox {
    std::array<double, 8> lo;
    std::array<double, 8> hi;

    static InnerBox make(const Scenario& s) {
        const double a = s.area_half_extent;
        InnerBox box;
        box.lo = {-a, -a, s.z_min, -a, -a, s.z_min, 0.0, 0.0};
        box.hi = {a, a, s.z_max, a, a, s.z_max, s.power_cap, s.power_cap};
        return box;
    }

    std::array<double, 8> encode(const PositionsPowers& p) const {
        const std::array<double, 8> raw = {p.info_position.x, p.info_position.y,
                                           p.info_position.z, p.jam_position.x,
                                           p.jam_position.y,  p.jam_position.z,
                                           p.power_info,      p.power_jam};
        std::array<double, 8> u{};
        for (std::size_t k = 0; k < 8; ++k) u[k] = (raw[k] - lo[k]) / (hi[k] - lo[k]);
        return u;
    }

    PositionsPowers decode(std::span<const double> u) const {
        std::array<double, 8> raw{};
        for (std::size_t k = 0; k < 8; ++k) raw[k] = lo[k] + u[k] * (hi[k] - lo[k]);
        PositionsPowers p;
        p.info_position = {raw[0], raw[1], raw[2]};
        p.jam_position = {raw[3], raw[4], raw[5]};
        p.power_info = raw[6];
        p.power_jam = raw[7];
        return p;
    }

    bool contains(const PositionsPowers& p) const {
        const auto u = encode(p);
        return std::all_of(u.begin(), u.end(),
                           [](double v) { return v >= -1e-12 && v <= 1.0 + 1e-12; });
    }
};

}  // namespace

std::pair<GroundLine, double> line_maximin(std::span<const Vec3> estimated_eaves) {
    if (estimated_eaves.empty())
        throw std::invalid_argument("line_maximin: at least one eavesdropper required");

    constexpr int kGridIntervals = 4096;
    std::array<double, kGridIntervals + 1> values{};
    auto nu_at = [&](int i) {
        return -kHalfPi + (static_cast<double>(i) / kGridIntervals) * std::numbers::pi;
    };
    double grid_best = 0.0;
    for (int i = 0; i <= kGridIntervals; ++i) {
        values[static_cast<std::size_t>(i)] = maximin_value(nu_at(i), estimated_eaves);
        grid_best = std::max(grid_best, values[static_cast<std::size_t>(i)]);
    }
    // an eavesdropper at the user forces zero everywhere; nu = 0 by convention
    if (grid_best == 0.0) return {GroundLine(0.0), 0.0};

    auto f = [&](double nu) { return maximin_value(nu, estimated_eaves); };

    // refine every near-tied cluster of grid maxima, then break ties toward
    // the smallest nu
    std::vector<std::pair<double, double>> candidates;  // (nu, value)
    const double keep = grid_best * (1.0 - 1e-6);
    int i = 0;
    while (i <= kGridIntervals) {
        if (values[static_cast<std::size_t>(i)] < keep) {
            ++i;
            continue;
        }
        int peak = i;
        int j = i;
        while (j <= kGridIntervals && values[static_cast<std::size_t>(j)] >= keep) {
            if (values[static_cast<std::size_t>(j)] > values[static_cast<std::size_t>(peak)])
                peak = j;
            ++j;
        }
        const double lo = nu_at(std::max(0, peak - 1));
        const double hi = nu_at(std::min(kGridIntervals, peak + 1));
        const double nu_star = golden_max(f, lo, hi);
        const double v_star = f(nu_star);
        if (v_star >= values[static_cast<std::size_t>(peak)])
            candidates.emplace_back(nu_star, v_star);
        else
            candidates.emplace_back(nu_at(peak), values[static_cast<std::size_t>(peak)]);
        i = j;
    }

    double best_value = 0.0;
    for (const auto& [nu, v] : candidates) best_value = std::max(best_value, v);
    double best_nu = kHalfPi;
    for (const auto& [nu, v] : candidates) {
        if (v >= best_value * (1.0 - 1e-9)) best_nu = std::min(best_nu, nu);
    }
    return {GroundLine(best_nu), f(best_nu)};
}

EulerAngles info_orientation(const Vec3& info_position, const GroundLine& line) {
    return angles_from_axis(plane_normal_from_ground_line(info_position, line));
}

EulerAngles jam_orientation(const Vec3& jam_position, const Vec3& user_position) {
    const Vec3 delta = user_position - jam_position;
    const double d = delta.norm();
    if (!(d > 0.0))
        throw DegenerateGeometryError("jam_orientation: jammer coincides with the user");
    return angles_from_axis(canonicalize_axis(delta / d));
}

std::vector<StartPoint> draw_start_points(const Scenario& scenario, int count) {
    Rng rng(scenario.seeds.optimizer);
    const double a = scenario.area_half_extent;
    const double z_span = scenario.z_max - scenario.z_min;
    std::vector<StartPoint> starts;
    starts.reserve(static_cast<std::size_t>(std::max(0, count)));
    for (int i = 0; i < count; ++i) {
        StartPoint sp;
        auto position = [&]() -> Vec3 {
            // 5% margins keep barrier-based methods strictly interior
            return {rng.uniform(-0.9 * a, 0.9 * a), rng.uniform(-0.9 * a, 0.9 * a),
                    rng.uniform(scenario.z_min + 0.05 * z_span, scenario.z_max - 0.05 * z_span)};
        };
        sp.positions_powers.info_position = position();
        sp.positions_powers.jam_position = position();
        sp.positions_powers.power_info = rng.uniform(0.05, 0.95) * scenario.power_cap;
        sp.positions_powers.power_jam = rng.uniform(0.05, 0.95) * scenario.power_cap;
        sp.info_angles = {rng.uniform(-0.9 * kHalfPi, 0.9 * kHalfPi),
                          rng.uniform(-0.9 * kHalfPi, 0.9 * kHalfPi), 0.0};
        sp.jam_angles = {rng.uniform(-0.9 * kHalfPi, 0.9 * kHalfPi),
                         rng.uniform(-0.9 * kHalfPi, 0.9 * kHalfPi), 0.0};
        starts.push_back(sp);
    }
    return starts;
}

InnerOptResult optimize_positions_powers(const Scenario& scenario, const GroundLine& line,
                                         const JitterBatch& batch, const PositionsPowers& start,
                                         const SimplexOptions& options) {
    const Vec3 offset = scenario.user_position;
    const Scenario local = recenter_to_user(scenario);
    const InnerBox box = InnerBox::make(local);

    PositionsPowers start_local = start;
    start_local.info_position -= offset;
    start_local.jam_position -= offset;
    if (!box.contains(start_local))
        throw std::invalid_argument("optimize_positions_powers: start outside the feasible box");

    RadioParams radio = local.make_radio(0.0, 0.0);
    const Vec3 user = Vec3::zero();
    auto objective = [&](std::span<const double> u) -> double {
        const PositionsPowers p = box.decode(u);
        try {
            const Pose info{p.info_position, info_orientation(p.info_position, line)};
            const Pose jam{p.jam_position, jam_orientation(p.jam_position, user)};
            radio.power_info = p.power_info;
            radio.power_jam = p.power_jam;
            return expected_secrecy(info, jam, radio, user, local.eaves_estimated, batch,
                                    /*clamped=*/false)
                .mean;
        } catch (const DegenerateGeometryError&) {
            return kNegInf;
        }
    };

    const auto u0 = box.encode(start_local);
    const OptResult r = simplex_maximize_box(objective, u0, options);

    InnerOptResult out;
    out.point = box.decode(r.x);
    out.point.info_position += offset;
    out.point.jam_position += offset;
    out.objective = r.value;
    out.evaluations = r.evaluations;
    out.converged = r.converged;
    return out;
}

PlanResult solve(const Scenario& scenario, const PlannerOptions& options) {
    scenario.validate();
    if (options.multi_starts < 1 || options.max_outer_iterations < 1 ||
        options.reporting_samples < 1)
        throw std::invalid_argument("solve: starts, iterations, and samples must be >= 1");
    const Vec3 offset = scenario.user_position;
    const Scenario local = recenter_to_user(scenario);

    JitterModel inner_model = local.jitter;
    inner_model.seed = local.seeds.mc;
    const JitterBatch inner_batch = draw_batch(inner_model);

    // The ground line depends only on the estimated eavesdropper positions,
    // so one maximin solve covers every outer sweep.
    const auto [line, line_value] = line_maximin(local.eaves_estimated);
    (void)line_value;

    const auto starts = draw_start_points(local, options.multi_starts);

    InnerOptResult best;
    best.objective = kNegInf;
    std::vector<double> trace;
    int iterations = 0;
    bool converged = false;

    for (int outer = 0; outer < options.max_outer_iterations; ++outer) {
        ++iterations;
        if (outer == 0) {
            for (const StartPoint& sp : starts) {
                const InnerOptResult r = optimize_positions_powers(
                    local, line, inner_batch, sp.positions_powers, options.simplex);
                if (r.objective > best.objective) best = r;
            }
        } else {
            // orientations are re-derived from positions inside every
            // evaluation; continue the search from the incumbent
            const InnerOptResult r =
                optimize_positions_powers(local, line, inner_batch, best.point, options.simplex);
            if (r.objective >= best.objective) best = r;
        }
        trace.push_back(best.objective);
        if (outer > 0) {
            const double previous = trace[trace.size() - 2];
            if (std::abs(best.objective - previous) <=
                options.outer_relative_tolerance * (1.0 + std::abs(previous))) {
                converged = true;
                break;
            }
        }
    }

    const EulerAngles info_angles = info_orientation(best.point.info_position, line);
    const EulerAngles jam_angles = jam_orientation(best.point.jam_position, Vec3::zero());
    const Pose info_local{best.point.info_position, info_angles};
    const Pose jam_local{best.point.jam_position, jam_angles};

    JitterModel report_model = local.jitter;
    report_model.sample_count = options.reporting_samples;
    report_model.seed = splitmix64(local.seeds.mc ^ kReportSeedSalt);
    const JitterBatch report_batch = draw_batch(report_model);

    const RadioParams radio = local.make_radio(best.point.power_info, best.point.power_jam);
    const McEstimate estimate =
        expected_secrecy(info_local, jam_local, radio, Vec3::zero(), local.eaves_estimated,
                         report_batch, /*clamped=*/true);

    PlanResult result;
    result.info_pose = {info_local.position + offset, info_angles};
    result.jam_pose = {jam_local.position + offset, jam_angles};
    result.radio = radio;
    result.expected_secrecy = estimate.mean;
    result.std_err = estimate.std_err;
    result.line = line;
    result.iterations = iterations;
    result.trace = std::move(trace);
    result.converged = converged;
    return result;
}

RunRecord make_record(const std::string& method, const Scenario& scenario,
                      const PlanResult& result, double duration_seconds) {
    RunRecord record;
    record.method = method;
    record.scenario_digest = scenario.digest();
    record.expected_secrecy_bps = result.expected_secrecy;
    record.std_err_bps = result.std_err;
    record.p_info = result.radio.power_info;
    record.p_jam = result.radio.power_jam;
    record.info_position = result.info_pose.position;
    record.info_rpy = result.info_pose.desired_orientation;
    record.jam_position = result.jam_pose.position;
    record.jam_rpy = result.jam_pose.desired_orientation;
    if (result.line) record.line_nu = result.line->nu();
    record.iterations = result.iterations;
    record.converged = result.converged;
    record.trace = result.trace;
    record.duration_seconds = duration_seconds;
    return record;
}

}  // namespace aerojam

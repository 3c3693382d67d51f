#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aerojam/optim.hpp"
#include "aerojam/scenario.hpp"

namespace aerojam {

struct PlanResult {
    Pose info_pose;
    Pose jam_pose;
    RadioParams radio;              // optimized powers
    double expected_secrecy = 0.0;  // clamped estimate on the reporting batch, bits/s
    double std_err = 0.0;
    std::optional<GroundLine> line;  // in the user-centered frame; proposed pipeline only
    int iterations = 0;
    std::vector<double> trace;  // surrogate objective after each outer sweep
    bool converged = false;
};

struct PlannerOptions {
    int multi_starts = 8;
    int max_outer_iterations = 10;
    double outer_relative_tolerance = 1e-6;
    int reporting_samples = 8192;
    SimplexOptions simplex;
};

// Ground line through the user maximizing the minimum squared horizontal
// distance to the estimated eavesdroppers. Coarse grid over nu followed by
// golden-section refinement; ties (within relative 1e-9) break toward the
// smallest nu. Returns the line and the attained min squared distance.
std::pair<GroundLine, double> line_maximin(std::span<const Vec3> estimated_eaves);

// Desired orientation placing the whole ground line (and hence the user on
// it) in the information drone's maximum-gain plane.
EulerAngles info_orientation(const Vec3& info_position, const GroundLine& line);

// Desired orientation pointing the jammer's antenna null at the user.
EulerAngles jam_orientation(const Vec3& jam_position, const Vec3& user_position);

struct PositionsPowers {
    Vec3 info_position;
    Vec3 jam_position;
    double power_info = 0.0;
    double power_jam = 0.0;
};

struct InnerOptResult {
    PositionsPowers point;
    double objective = 0.0;  // unclamped surrogate on the common batch
    int evaluations = 0;
    bool converged = false;
};

// Local search over both positions and both powers under exact box
// constraints, orientations re-derived from positions at every evaluation,
// objective = Monte Carlo mean of the unclamped utility on the fixed batch
// (common random numbers). Never returns a point worse than the start.
InnerOptResult optimize_positions_powers(const Scenario& scenario, const GroundLine& line,
                                         const JitterBatch& batch, const PositionsPowers& start,
                                         const SimplexOptions& options = {});

// The full pipeline: line + information-drone orientation, jammer null
// steering, then joint position/power search, iterated to convergence.
// The final report re-evaluates the clamped rate on a fresh reporting batch.
PlanResult solve(const Scenario& scenario, const PlannerOptions& options = {});

// Multi-start initial point; one shared seed stream so every method draws
// identical starts for a given scenario.
struct StartPoint {
    PositionsPowers positions_powers;
    EulerAngles info_angles;  // used by the 12-variable baseline only
    EulerAngles jam_angles;
};

std::vector<StartPoint> draw_start_points(const Scenario& scenario, int count);

RunRecord make_record(const std::string& method, const Scenario& scenario,
                      const PlanResult& result, double duration_seconds);

}  // namespace aerojam

#pragma once

#include "aerojam/planner.hpp"

namespace aerojam {

enum class BaselineKind {
    Joint12D,           // free orientations, full 12-variable program
    ConventionalFixed,  // under-actuated drones, orientations pinned to zero
};

struct BaselineOptions {
    int multi_starts = 8;
    int reporting_samples = 8192;
    BarrierOptions barrier;
};

// Benchmark 1: log-barrier interior-point ascent over all twelve decision
// variables (two positions, two roll/pitch pairs, two powers), maximizing
// the clamped Monte Carlo expected secrecy directly.
PlanResult solve_joint_12d(const Scenario& scenario, const BaselineOptions& options = {});

// Benchmark 2: under-actuated drones. Orientations pinned to zero (vertical
// antenna axes); same interior-point search restricted to positions and
// powers.
PlanResult solve_conventional(const Scenario& scenario, const BaselineOptions& options = {});

PlanResult solve_baseline(BaselineKind kind, const Scenario& scenario,
                          const BaselineOptions& options = {});

}  // namespace aerojam

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace aerojam {

using ObjectiveFn = std::function<double(std::span<const double>)>;

struct OptResult {
    std::vector<double> x;
    double value = 0.0;  // objective at x (maximization sense)
    int evaluations = 0;
    bool converged = false;
};

struct SimplexOptions {
    int max_evaluations = 2000;
    double initial_step = 0.15;
    double x_tolerance = 1e-8;
    double f_tolerance = 1e-11;
    int restarts = 2;  // re-seed the simplex around the incumbent
};

// Derivative-free simplex ascent over the unit box [0,1]^d. Every candidate
// is clipped into the box before evaluation, so the objective never sees an
// infeasible point. Deterministic.
OptResult simplex_maximize_box(const ObjectiveFn& objective, std::span<const double> start,
                               const SimplexOptions& options = {});

struct BarrierOptions {
    double mu_initial = 1.0;
    double mu_shrink = 0.2;
    int stages = 6;
    int max_iterations_per_stage = 60;
    double fd_step_relative = 1e-6;  // central-difference step
    double gradient_tolerance = 1e-6;
    double objective_scale = 1.0;  // objective divided by this inside the barrier
};

// Log-barrier gradient ascent over the open unit box (0,1)^d with
// central-difference gradients of the objective and the analytic barrier
// gradient. Returns the best feasible point seen. Deterministic.
OptResult barrier_maximize_box(const ObjectiveFn& objective, std::span<const double> start,
                               const BarrierOptions& options = {});

}  // namespace aerojam

#include "aerojam/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aerojam {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void clip_unit(std::vector<double>& x) {
    for (double& v : x) v = std::clamp(v, 0.0, 1.0);
}

struct Vertex {
    std::vector<double> x;
    double f = 0.0;  // minimization sense
};

double simplex_diameter(const std::vector<Vertex>& simplex) {
    double d = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i)
        for (std::size_t k = 0; k < simplex[0].x.size(); ++k)
            d = std::max(d, std::abs(simplex[i].x[k] - simplex[0].x[k]));
    return d;
}

}  // namespace

OptResult simplex_maximize_box(const ObjectiveFn& objective, std::span<const double> start,
                               const SimplexOptions& options) {
    const std::size_t d = start.size();
    int evals = 0;
    auto eval = [&](std::vector<double>& x) {
        clip_unit(x);
        ++evals;
        const double v = objective(x);
        return std::isnan(v) ? kNegInf : v;
    };

    std::vector<double> best_x(start.begin(), start.end());
    clip_unit(best_x);
    double best_value = objective(best_x);
    ++evals;
    if (std::isnan(best_value)) best_value = kNegInf;

    bool converged = false;
    double step = options.initial_step;
    for (int round = 0; round <= options.restarts; ++round) {
        const double round_start_value = best_value;

        std::vector<Vertex> simplex;
        simplex.reserve(d + 1);
        simplex.push_back({best_x, -best_value});
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<double> x = best_x;
            x[i] += (x[i] + step <= 1.0) ? step : -step;
            const double f = -eval(x);
            simplex.push_back({std::move(x), f});
        }

        while (evals < options.max_evaluations) {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            const double spread = std::abs(simplex.back().f - simplex.front().f);
            if (simplex_diameter(simplex) < options.x_tolerance ||
                spread < options.f_tolerance * (1.0 + std::abs(simplex.front().f))) {
                converged = true;
                break;
            }

            std::vector<double> centroid(d, 0.0);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i].x[k];
            }
            for (double& c : centroid) c /= static_cast<double>(d);
            const Vertex& worst = simplex.back();

            auto blend = [&](double t) {
                std::vector<double> x(d);
                for (std::size_t k = 0; k < d; ++k)
                    x[k] = centroid[k] + t * (centroid[k] - worst.x[k]);
                return x;
            };

            std::vector<double> xr = blend(1.0);  // reflection
            const double fr = -eval(xr);
            if (fr < simplex.front().f) {
                std::vector<double> xe = blend(2.0);  // expansion
                const double fe = -eval(xe);
                simplex.back() = fe < fr ? Vertex{std::move(xe), fe} : Vertex{std::move(xr), fr};
            } else if (fr < simplex[d - 1].f) {
                simplex.back() = {std::move(xr), fr};
            } else {
                const bool outside = fr < worst.f;
                std::vector<double> xc = blend(outside ? 0.5 : -0.5);
                const double fc = -eval(xc);
                if (fc < (outside ? fr : worst.f)) {
                    simplex.back() = {std::move(xc), fc};
                } else {
                    // shrink toward the best vertex
                    for (std::size_t i = 1; i <= d; ++i) {
                        for (std::size_t k = 0; k < d; ++k)
                            simplex[i].x[k] =
                                simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
                        simplex[i].f = -eval(simplex[i].x);
                        if (evals >= options.max_evaluations) break;
                    }
                }
            }
        }

        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        if (-simplex.front().f > best_value) {
            best_value = -simplex.front().f;
            best_x = simplex.front().x;
        }

        if (evals >= options.max_evaluations) break;
        step *= 0.25;
        const bool improved =
            best_value > round_start_value + 1e-12 * (1.0 + std::abs(round_start_value));
        if (round > 0 && !improved) break;
    }

    return {std::move(best_x), best_value, evals, converged};
}

OptResult barrier_maximize_box(const ObjectiveFn& objective, std::span<const double> start,
                               const BarrierOptions& options) {
    const std::size_t d = start.size();
    const double scale = options.objective_scale != 0.0 ? options.objective_scale : 1.0;
    int evals = 0;
    auto f = [&](const std::vector<double>& x) {
        ++evals;
        const double v = objective(x) / scale;
        return std::isnan(v) ? kNegInf : v;
    };

    auto inside = [&](const std::vector<double>& x) {
        for (double v : x)
            if (!(v > 0.0) || !(v < 1.0)) return false;
        return true;
    };
    auto log_barrier = [&](const std::vector<double>& x) {
        double b = 0.0;
        for (double v : x) b += std::log(v) + std::log(1.0 - v);
        return b;
    };

    std::vector<double> x(start.begin(), start.end());
    for (double& v : x) v = std::clamp(v, 1e-6, 1.0 - 1e-6);

    double fx = f(x);
    std::vector<double> best_x = x;
    double best_value = fx * scale;

    double mu = options.mu_initial;
    for (int stage = 0; stage < options.stages; ++stage) {
        double trial_step = 0.05;
        for (int iter = 0; iter < options.max_iterations_per_stage; ++iter) {
            // objective gradient by central differences, barrier gradient analytic
            std::vector<double> grad(d);
            for (std::size_t k = 0; k < d; ++k) {
                double h = options.fd_step_relative * (1.0 + std::abs(x[k]));
                h = std::min(h, 0.4 * std::min(x[k], 1.0 - x[k]));
                std::vector<double> xp = x;
                std::vector<double> xm = x;
                xp[k] += h;
                xm[k] -= h;
                grad[k] = (f(xp) - f(xm)) / (2.0 * h) + mu * (1.0 / x[k] - 1.0 / (1.0 - x[k]));
            }
            double gnorm = 0.0;
            for (double g : grad) gnorm += g * g;
            gnorm = std::sqrt(gnorm);
            if (gnorm < options.gradient_tolerance) break;

            const double phi0 = fx + mu * log_barrier(x);
            double step = trial_step;
            bool accepted = false;
            std::vector<double> xn(d);
            double fn = kNegInf;
            for (int ls = 0; ls < 30; ++ls) {
                for (std::size_t k = 0; k < d; ++k) xn[k] = x[k] + step * grad[k] / gnorm;
                if (inside(xn)) {
                    fn = f(xn);
                    const double phin = fn + mu * log_barrier(xn);
                    if (phin >= phi0 + 1e-4 * step * gnorm) {
                        accepted = true;
                        break;
                    }
                }
                step *= 0.5;
            }
            if (!accepted) break;
            x = xn;
            fx = fn;
            trial_step = std::min(step * 1.5, 0.2);
            if (fx * scale > best_value) {
                best_value = fx * scale;
                best_x = x;
            }
        }
        mu *= options.mu_shrink;
    }

    return {std::move(best_x), best_value, evals, true};
}

}  // namespace aerojam

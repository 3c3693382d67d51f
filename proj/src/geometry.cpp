#include "aerojam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aerojam/errors.hpp"

namespace aerojam {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

GroundLine::GroundLine(double nu) : nu_(nu) {
    if (!std::isfinite(nu) || std::abs(nu) > kHalfPi + 1e-12)
        throw std::invalid_argument("GroundLine: nu must lie in [-pi/2, pi/2]");
    if (std::abs(nu) == kHalfPi) {
        direction_ = {0.0, 1.0, 0.0};
        normal_ = {1.0, 0.0, 0.0};
    } else {
        direction_ = {std::cos(nu), std::sin(nu), 0.0};
        normal_ = {-std::sin(nu), std::cos(nu), 0.0};
    }
}

double GroundLine::distance_to(const Vec3& p) const {
    return std::abs(normal_.x * p.x + normal_.y * p.y);
}

Vec3 orientation_vector(const EulerAngles& angles) {
    if (!std::isfinite(angles.roll) || !std::isfinite(angles.pitch) || !std::isfinite(angles.yaw))
        throw std::invalid_argument("orientation_vector: non-finite angles");
    const double cr = std::cos(angles.roll);
    const double sr = std::sin(angles.roll);
    const double cp = std::cos(angles.pitch);
    const double sp = std::sin(angles.pitch);
    const double cy = std::cos(angles.yaw);
    const double sy = std::sin(angles.yaw);
    return {cr * sp * cy + sr * sy, cr * sp * sy - sr * cy, cr * cp};
}

double elevation_cosine(const Vec3& observer_position, const EulerAngles& realized_angles,
                        const Vec3& target) {
    const Vec3 delta = target - observer_position;
    const double d = delta.norm();
    if (!(d > 0.0))
        throw DegenerateGeometryError("elevation_cosine: target coincides with observer");
    const double c = dot(delta, orientation_vector(realized_angles)) / d;
    return std::clamp(c, -1.0, 1.0);
}

double antenna_gain(double cos_gamma) {
    if (!(std::abs(cos_gamma) <= 1.0 + 1e-12))
        throw std::invalid_argument("antenna_gain: cosine outside [-1, 1]");
    const double c = std::clamp(cos_gamma, -1.0, 1.0);
    return 1.0 - c * c;
}

Vec3 canonicalize_axis(const Vec3& axis) {
    if (!(axis.norm() > 1e-12)) throw DegenerateGeometryError("canonicalize_axis: zero axis");
    if (axis.z > 0.0) return axis;
    if (axis.z < 0.0) return -axis;
    if (axis.x != 0.0) return axis.x > 0.0 ? axis : -axis;
    return axis.y > 0.0 ? axis : -axis;
}

EulerAngles angles_from_axis(const Vec3& axis) {
    if (std::abs(axis.norm() - 1.0) > 1e-6)
        throw std::invalid_argument("angles_from_axis: axis must be unit length");
    if (axis.z < -1e-9) throw std::invalid_argument("angles_from_axis: axis must have z >= 0");
    const double roll = -std::asin(std::clamp(axis.y, -1.0, 1.0));
    const double cos_roll = std::cos(roll);
    // The common 1/cos(roll) factor cannot change the quadrant, so it drops
    // out of atan2. At the |y| = 1 singularity any pitch gives the same axis;
    // 0 keeps the output deterministic.
    const double pitch = cos_roll > 1e-12 ? std::atan2(axis.x, std::max(axis.z, 0.0)) : 0.0;
    return {roll, pitch, 0.0};
}

Vec3 plane_normal_from_ground_line(const Vec3& drone_position, const GroundLine& line) {
    // two fixed points on the line, one unit step either side of the user
    const Vec3 p1 = -1.0 * line.direction();
    const Vec3 p2 = line.direction();
    const Vec3 r1 = p1 - drone_position;
    const Vec3 r2 = p2 - drone_position;
    const double n1 = r1.norm();
    const double n2 = r2.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0))
        throw DegenerateGeometryError("plane_normal_from_ground_line: drone on the line");
    const Vec3 c = cross(r1 / n1, r2 / n2);
    const double cn = c.norm();
    if (cn < 1e-12)
        throw DegenerateGeometryError("plane_normal_from_ground_line: drone on the line");
    return canonicalize_axis(c / cn);
}

}  // namespace aerojam

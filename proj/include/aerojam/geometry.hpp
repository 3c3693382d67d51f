#pragma once

#include "aerojam/vec3.hpp"

namespace aerojam {

// Roll/pitch/yaw in radians. Desired orientations keep |roll|, |pitch| <= pi/2
// and yaw == 0; realized orientations (desired + jitter) are unconstrained.
struct EulerAngles {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
};

struct Pose {
    Vec3 position;  // meters, world frame
    EulerAngles desired_orientation;
};

// Ground line through the user: { t * (cos nu, sin nu, 0) : t in R }.
// nu = +pi/2 and nu = -pi/2 denote the same (vertical) line.
class GroundLine {
public:
    explicit GroundLine(double nu);

    double nu() const { return nu_; }
    const Vec3& direction() const { return direction_; }
    // in-plane unit normal; the horizontal distance from a point to the line
    // is |normal . p|
    const Vec3& normal() const { return normal_; }
    double distance_to(const Vec3& p) const;

private:
    double nu_;
    Vec3 direction_;
    Vec3 normal_;
};

// Antenna axis for a given orientation; always unit norm.
Vec3 orientation_vector(const EulerAngles& angles);

// Cosine of the angle between the antenna axis and the observer->target
// direction, in [-1, 1].
double elevation_cosine(const Vec3& observer_position, const EulerAngles& realized_angles,
                        const Vec3& target);

// Dipole radiation pattern: sin^2 of the elevation angle, i.e. 1 - cos^2.
double antenna_gain(double cos_gamma);

// Flip a unit axis into the z >= 0 half-space; when z == 0 the representative
// with first nonzero component positive is returned. The gain is invariant
// under axis sign, so nothing is lost.
Vec3 canonicalize_axis(const Vec3& axis);

// Desired roll/pitch (yaw = 0) whose antenna axis equals the given axis.
// Requires z >= 0; when the axis is +-y the pitch is indeterminate and is
// fixed to 0.
EulerAngles angles_from_axis(const Vec3& axis);

// Unit normal of the plane spanned by the drone and the ground line: the
// antenna axis that places the whole line inside the maximum-gain plane.
Vec3 plane_normal_from_ground_line(const Vec3& drone_position, const GroundLine& line);

}  // namespace aerojam

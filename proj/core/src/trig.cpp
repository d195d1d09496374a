#include "hypsurf/trig.hpp"

#include <cmath>
#include <numbers>

#include "hypsurf/errors.hpp"

namespace hypsurf {

double collar_width(double l) {
    if (!(l > 0)) fail(errc::non_positive_length, "collar_width: length must be positive");
    return std::asinh(1 / std::sinh(l / 2));
}

double loop_from_horocycle(double horocycle_length) {
    if (!(horocycle_length > 0))
        fail(errc::non_positive_length, "loop_from_horocycle: length must be positive");
    return 2 * std::asinh(horocycle_length / 2);
}

double apex_distance(double opposite_half, double half_angle) {
    if (!(opposite_half > 0))
        fail(errc::domain_error, "apex_distance: opposite_half must be positive");
    if (!(half_angle > 0) || !(half_angle < std::numbers::pi / 2))
        fail(errc::domain_error, "apex_distance: half_angle must lie in (0, pi/2)");
    return std::acosh(std::cosh(opposite_half) / std::sin(half_angle));
}

}  // namespace hypsurf

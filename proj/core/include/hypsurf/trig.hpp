#pragma once

namespace hypsurf {

/// Half-width of the standard collar around a closed geodesic of length l:
/// arcsinh(1/sinh(l/2)).
double collar_width(double l);

/// Length of the geodesic loop homotopic to a horocyclic loop of the given
/// length through the same point: 2 arcsinh(h/2).
double loop_from_horocycle(double horocycle_length);

/// Symmetric right-angled pentagon with apex angle 2*half_angle whose side
/// opposite the apex has half-length opposite_half; returns the distance from
/// the apex to the two geodesics carrying the lateral sides. Closed form
/// cosh(d) = cosh(opposite_half)/sin(half_angle).
double apex_distance(double opposite_half, double half_angle);

}  // namespace hypsurf

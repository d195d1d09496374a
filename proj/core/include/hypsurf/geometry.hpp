#pragma once

#include "hypsurf/moebius.hpp"

namespace hypsurf {

/// Hyperbolic distance, cosh(dist) = 1 + |p-q|^2 / (2 y_p y_q).
double dist(const HPoint& p, const HPoint& q);

/// Distance from a point to a geodesic (length of the perpendicular).
double point_to_geodesic(const HPoint& p, const Geodesic& g);

enum class GeodesicRelationKind { Equal, Crossing, Asymptotic, Disjoint };

struct GeodesicRelation {
    GeodesicRelationKind kind;
    double distance = 0;  // set for Disjoint: length of the common perpendicular
};

GeodesicRelation geodesics_relation(const Geodesic& g1, const Geodesic& g2);

/// Displacement of p under a hyperbolic map, with the translation length and
/// the offset h = dist(p, axis); sinh(value/2) = sinh(length/2) cosh(offset).
struct Displacement {
    double value;
    double length;
    double offset;
};

Displacement displacement(const MoebiusMap& m, const HPoint& p);

enum class Tangency { Disjoint, Tangent, Overlapping };
const char* to_string(Tangency t);

struct HorodiskImage {
    Horodisk image;
    Tangency against_source;
};

/// Image of a horodisk (again a horodisk) plus its tangency status against the source.
HorodiskImage horodisk_image(const MoebiusMap& m, const Horodisk& B, double band = 1e-9);

/// Tangency of two horodisks from plain euclidean data; used as the oracle for
/// the isometric-circle route taken by horodisk_image.
Tangency horodisk_tangency(const Horodisk& B1, const Horodisk& B2, double band = 1e-9);

/// Oriented distance from p to the horodisk boundary, negative inside.
double horodisk_signed_distance(const HPoint& p, const Horodisk& B);

}  // namespace hypsurf

#pragma once

#include <cmath>
#include <string>

#include "hypsurf/errors.hpp"

namespace hypsurf {

/// Point of the upper half-plane, y > 0.
struct HPoint {
    double x = 0;
    double y = 1;
};

/// Point of the boundary line R u {infinity}.
struct BoundaryPoint {
    double value = 0;
    bool at_infinity = false;

    static BoundaryPoint infinity() { return {0, true}; }
    static BoundaryPoint finite(double v) { return {v, false}; }
};

bool same_boundary_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-12);

/// Euclidean circle centered on the boundary line.
struct Circle {
    double center = 0;
    double radius = 1;
};

/// Horodisk: half-plane {Im > size} when based at infinity, otherwise the
/// disk of euclidean diameter `size` tangent to the boundary at `base`.
struct Horodisk {
    BoundaryPoint base;
    double size = 1;
};

/// Real Moebius map z -> (az+b)/(cz+d), stored with ad-bc = 1 and compared up to sign.
struct MoebiusMap {
    double a = 1, b = 0, c = 0, d = 1;
};

inline constexpr double parabolic_trace_band = 1e-10;

/// Normalizes the determinant to 1; rejects inputs that are not close to unimodular.
MoebiusMap moebius(double a, double b, double c, double d);
/// Canonical sign: first nonzero entry among a, b made positive.
MoebiusMap canonical_sign(const MoebiusMap& m);
bool same_map(const MoebiusMap& m1, const MoebiusMap& m2, double tol = 1e-9);

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
MoebiusMap inverse(const MoebiusMap& m);
inline double trace(const MoebiusMap& m) { return m.a + m.d; }

HPoint apply(const MoebiusMap& m, const HPoint& p);
BoundaryPoint apply(const MoebiusMap& m, const BoundaryPoint& p);

enum class MapClass { Identity, Elliptic, Parabolic, Hyperbolic };

MapClass classify(const MoebiusMap& m, double band = parabolic_trace_band);
const char* to_string(MapClass k);

/// 2 arccosh(|tr|/2); throws unless the map is hyperbolic.
double translation_length(const MoebiusMap& m);

/// Geodesic of H, stored by its boundary endpoints together with the derived
/// euclidean shape (vertical line or half-circle).
struct Geodesic {
    BoundaryPoint e1, e2;
    bool vertical = false;
    double foot = 0;    // vertical case
    double center = 0;  // half-circle case
    double radius = 1;

    static Geodesic through(const BoundaryPoint& p, const BoundaryPoint& q);
};

/// Axis of a hyperbolic map: the geodesic between its fixed points.
Geodesic axis(const MoebiusMap& m);

/// Locus |cz+d| = 1; throws when the map fixes infinity (|c| below tol).
Circle isometric_circle(const MoebiusMap& m, double tol = 1e-12);

}  // namespace hypsurf

#include "hypsurf/moebius.hpp"

#include <cmath>

namespace hypsurf {

bool same_boundary_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
    if (p.at_infinity || q.at_infinity) return p.at_infinity && q.at_infinity;
    double scale = std::max({1.0, std::fabs(p.value), std::fabs(q.value)});
    return std::fabs(p.value - q.value) <= tol * scale;
}

MoebiusMap moebius(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!(det > 0) || std::fabs(det - 1) > 1e-12) {
        if (det <= 1e-300)
            fail(errc::domain_error, "moebius: determinant must be positive");
        double s = std::sqrt(det);
        a /= s;
        b /= s;
        c /= s;
        d /= s;
        if (std::fabs(a * d - b * c - 1) > 1e-12)
            fail(errc::domain_error, "moebius: determinant too far from 1");
    }
    return {a, b, c, d};
}

MoebiusMap canonical_sign(const MoebiusMap& m) {
    double lead = (m.a != 0) ? m.a : m.b;
    if (lead < 0) return {-m.a, -m.b, -m.c, -m.d};
    return m;
}

bool same_map(const MoebiusMap& m1, const MoebiusMap& m2, double tol) {
    MoebiusMap p = canonical_sign(m1), q = canonical_sign(m2);
    return std::fabs(p.a - q.a) <= tol && std::fabs(p.b - q.b) <= tol &&
           std::fabs(p.c - q.c) <= tol && std::fabs(p.d - q.d) <= tol;
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
            m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

MoebiusMap inverse(const MoebiusMap& m) { return {m.d, -m.b, -m.c, m.a}; }

HPoint apply(const MoebiusMap& m, const HPoint& p) {
    // (az+b)(conj(cz+d)) expanded on z = x+iy
    double cx = m.c * p.x + m.d;
    double cy = m.c * p.y;
    double den = cx * cx + cy * cy;
    double ax = m.a * p.x + m.b;
    double ay = m.a * p.y;
    return {(ax * cx + ay * cy) / den, p.y / den};
}

BoundaryPoint apply(const MoebiusMap& m, const BoundaryPoint& p) {
    if (p.at_infinity) {
        if (m.c == 0) return BoundaryPoint::infinity();
        return BoundaryPoint::finite(m.a / m.c);
    }
    double den = m.c * p.value + m.d;
    if (den == 0) return BoundaryPoint::infinity();
    return BoundaryPoint::finite((m.a * p.value + m.b) / den);
}

MapClass classify(const MoebiusMap& m, double band) {
    if (std::fabs(m.b) < 1e-12 && std::fabs(m.c) < 1e-12 && std::fabs(m.a - m.d) < 1e-12)
        return MapClass::Identity;
    double t = std::fabs(trace(m));
    if (std::fabs(t - 2) <= band) return MapClass::Parabolic;
    return t > 2 ? MapClass::Hyperbolic : MapClass::Elliptic;
}

const char* to_string(MapClass k) {
    switch (k) {
        case MapClass::Identity: return "identity";
        case MapClass::Elliptic: return "elliptic";
        case MapClass::Parabolic: return "parabolic";
        case MapClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

double translation_length(const MoebiusMap& m) {
    if (classify(m) != MapClass::Hyperbolic)
        fail(errc::not_hyperbolic, "translation_length: map is not hyperbolic");
    return 2 * std::acosh(std::fabs(trace(m)) / 2);
}

Geodesic Geodesic::through(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (same_boundary_point(p, q))
        fail(errc::domain_error, "geodesic endpoints must be distinct");
    Geodesic g;
    g.e1 = p;
    g.e2 = q;
    if (p.at_infinity || q.at_infinity) {
        g.vertical = true;
        g.foot = p.at_infinity ? q.value : p.value;
    } else {
        g.vertical = false;
        g.center = (p.value + q.value) / 2;
        g.radius = std::fabs(p.value - q.value) / 2;
    }
    return g;
}

Geodesic axis(const MoebiusMap& m) {
    if (classify(m) != MapClass::Hyperbolic)
        fail(errc::not_hyperbolic, "axis: map is not hyperbolic");
    if (m.c == 0)
        return Geodesic::through(BoundaryPoint::infinity(),
                                 BoundaryPoint::finite(m.b / (m.d - m.a)));
    // fixed points: roots of c z^2 + (d-a) z - b = 0
    double q = m.a - m.d;
    double disc = std::sqrt(trace(m) * trace(m) - 4);
    double r1 = (q >= 0) ? (q + disc) / (2 * m.c) : (q - disc) / (2 * m.c);
    double r2 = (-m.b / m.c) / r1;
    return Geodesic::through(BoundaryPoint::finite(r1), BoundaryPoint::finite(r2));
}

Circle isometric_circle(const MoebiusMap& m, double tol) {
    if (std::fabs(m.c) < tol)
        fail(errc::fixes_infinity, "isometric_circle: map fixes infinity");
    return {-m.d / m.c, 1 / std::fabs(m.c)};
}

}  // namespace hypsurf

#include "hypsurf/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hypsurf {

double dist(const HPoint& p, const HPoint& q) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    double e = std::sqrt(dx * dx + dy * dy);
    // cosh(d) = 1 + e^2/(2 y_p y_q), written as 2 arcsinh for stability near 0
    return 2 * std::asinh(e / (2 * std::sqrt(p.y * q.y)));
}

double point_to_geodesic(const HPoint& p, const Geodesic& g) {
    if (g.vertical) return std::asinh(std::fabs(p.x - g.foot) / p.y);
    double dx = p.x - g.center;
    double s = (dx * dx + p.y * p.y - g.radius * g.radius) / (2 * g.radius * p.y);
    return std::asinh(std::fabs(s));
}

namespace {

// frame sending g to (0, infinity); returns the image of q, infinite when q
// hits the pole.
struct FrameImage {
    double value = 0;
    bool at_infinity = false;
};

FrameImage frame_image(const Geodesic& g, const BoundaryPoint& q) {
    double alpha = 0, beta = 0;
    bool alpha_inf = g.e1.at_infinity, beta_inf = g.e2.at_infinity;
    alpha = g.e1.value;
    beta = g.e2.value;
    if (q.at_infinity) {
        if (alpha_inf) return {0, false};
        if (beta_inf) return {0, true};
        return {1, false};  // (z-alpha)/(z-beta) at infinity
    }
    if (alpha_inf) {
        if (q.value == beta) return {0, true};
        return {1 / (q.value - beta), false};
    }
    if (beta_inf) return {q.value - alpha, false};
    if (q.value == beta) return {0, true};
    return {(q.value - alpha) / (q.value - beta), false};
}

}  // namespace

GeodesicRelation geodesics_relation(const Geodesic& g1, const Geodesic& g2) {
    bool s11 = same_boundary_point(g1.e1, g2.e1), s12 = same_boundary_point(g1.e1, g2.e2);
    bool s21 = same_boundary_point(g1.e2, g2.e1), s22 = same_boundary_point(g1.e2, g2.e2);
    int shared = int(s11 || s12) + int(s21 || s22);
    if (shared == 2) return {GeodesicRelationKind::Equal, 0};
    if (shared == 1) return {GeodesicRelationKind::Asymptotic, 0};
    FrameImage c = frame_image(g1, g2.e1);
    FrameImage d = frame_image(g1, g2.e2);
    if (c.at_infinity || d.at_infinity || c.value == 0 || d.value == 0)
        return {GeodesicRelationKind::Asymptotic, 0};
    if ((c.value < 0) != (d.value < 0)) return {GeodesicRelationKind::Crossing, 0};
    // cosh(dist) = |c+d| / |d-c|, the cross-ratio form of the common perpendicular
    double num = std::fabs(c.value + d.value);
    double den = std::fabs(d.value - c.value);
    return {GeodesicRelationKind::Disjoint, std::acosh(num / den)};
}

Displacement displacement(const MoebiusMap& m, const HPoint& p) {
    if (classify(m) != MapClass::Hyperbolic)
        fail(errc::not_hyperbolic, "displacement: map is not hyperbolic");
    Displacement out{};
    out.value = dist(p, apply(m, p));
    out.length = translation_length(m);
    out.offset = point_to_geodesic(p, axis(m));
    return out;
}

const char* to_string(Tangency t) {
    switch (t) {
        case Tangency::Disjoint: return "disjoint";
        case Tangency::Tangent: return "tangent";
        case Tangency::Overlapping: return "overlapping";
    }
    return "?";
}

Tangency horodisk_tangency(const Horodisk& B1, const Horodisk& B2, double band) {
    if (B1.base.at_infinity && B2.base.at_infinity) return Tangency::Overlapping;
    if (B1.base.at_infinity || B2.base.at_infinity) {
        double h = B1.base.at_infinity ? B1.size : B2.size;
        double s = B1.base.at_infinity ? B2.size : B1.size;
        if (std::fabs(s - h) <= band * std::max(1.0, h)) return Tangency::Tangent;
        return s < h ? Tangency::Disjoint : Tangency::Overlapping;
    }
    double t = B1.base.value - B2.base.value;
    double gap = t * t;
    double touch = B1.size * B2.size;
    if (std::fabs(gap - touch) <= band * std::max(1.0, touch)) return Tangency::Tangent;
    return gap > touch ? Tangency::Disjoint : Tangency::Overlapping;
}

HorodiskImage horodisk_image(const MoebiusMap& m, const Horodisk& B, double band) {
    MoebiusMap mu = m;
    double h = B.size;
    if (!B.base.at_infinity) {
        // sigma = (0,-1;1,-t) sends B to the half-plane of height 1/size
        MoebiusMap sigma_inv{-B.base.value, 1, -1, 0};
        mu = compose(m, sigma_inv);
        h = 1 / B.size;
    }
    Horodisk out;
    if (std::fabs(mu.c) < 1e-12) {
        out.base = BoundaryPoint::infinity();
        out.size = h * mu.a * mu.a;
    } else {
        out.base = BoundaryPoint::finite(mu.a / mu.c);
        out.size = 1 / (mu.c * mu.c * h);
    }
    return {out, horodisk_tangency(B, out, band)};
}

double horodisk_signed_distance(const HPoint& p, const Horodisk& B) {
    if (B.base.at_infinity) return std::log(B.size / p.y);
    double dx = p.x - B.base.value;
    double r2 = dx * dx + p.y * p.y;
    return std::log(r2 / (B.size * p.y));
}

}  // namespace hypsurf

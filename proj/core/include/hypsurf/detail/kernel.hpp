#pragma once

// Scalar-templated matrix kernel. The public API works in double; the long
// double instantiation backs the orthogeodesic enumeration and the extended
// precision re-runs, where conjugation by deep ball words would otherwise
// amplify rounding error past the deduplication tolerance.

#include <cmath>
#include <utility>

namespace hypsurf::detail {

template <class T>
struct tmat {
    T a, b, c, d;
};

template <class T>
tmat<T> mul(const tmat<T>& m1, const tmat<T>& m2) {
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
            m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

template <class T>
tmat<T> inv(const tmat<T>& m) {
    return {m.d, -m.b, -m.c, m.a};
}

template <class T>
T tr(const tmat<T>& m) {
    return m.a + m.d;
}

template <class T>
tmat<T> ident() {
    return {T(1), T(0), T(0), T(1)};
}

/// Endpoints of the axis of a hyperbolic matrix; `second` of each pair marks infinity.
template <class T>
struct taxis {
    T p1, p2;
    bool inf1 = false;
};

template <class T>
taxis<T> axis_of(const tmat<T>& m) {
    if (m.c == T(0)) return {T(0), m.b / (m.d - m.a), true};
    T q = m.a - m.d;
    T disc = std::sqrt(tr(m) * tr(m) - T(4));
    T r1 = (q >= T(0)) ? (q + disc) / (T(2) * m.c) : (q - disc) / (T(2) * m.c);
    T r2 = (-m.b / m.c) / r1;
    return {r1, r2, false};
}

/// Common perpendicular between geodesic `e1` and geodesic `e2`, measured by
/// mapping e1 to (0, infinity). Returns {dist, foot} where foot is the signed
/// arclength position of the perpendicular foot along e1 (log of the euclidean
/// height in the normalized frame). No value when the geodesics meet, share an
/// endpoint, or coincide up to rounding noise.
template <class T>
struct perp {
    T distance, foot;
    bool ok = false;
};

template <class T>
struct line_frame {
    // frame(z) = (u1 z + u2)/(u3 z + u4) sends the geodesic to (0, infinity)
    T u1, u2, u3, u4;
};

template <class T>
line_frame<T> frame_of(const taxis<T>& g) {
    if (g.inf1) return {T(0), T(1), T(1), -g.p2};  // p1 = infinity -> 0, p2 -> infinity
    return {T(1), -g.p1, T(1), -g.p2};
}

template <class T>
bool frame_apply(const line_frame<T>& f, T z, bool z_inf, T& out) {
    T num, den;
    if (z_inf) {
        num = f.u1;
        den = f.u3;
    } else {
        num = f.u1 * z + f.u2;
        den = f.u3 * z + f.u4;
    }
    if (den == T(0)) return false;
    out = num / den;
    return true;
}

template <class T>
perp<T> perp_between(const taxis<T>& g1, const taxis<T>& g2) {
    line_frame<T> f = frame_of(g1);
    T c, d;
    if (!frame_apply(f, g2.p1, g2.inf1, c)) return {};
    if (!frame_apply(f, g2.p2, false, d)) return {};
    if (c == T(0) || d == T(0)) return {};
    T lo = std::min(std::fabs(c), std::fabs(d));
    T hi = std::max(std::fabs(c), std::fabs(d));
    if (lo < T(1e-8) && hi > T(1e8)) return {};  // same geodesic up to noise
    if ((c < T(0)) != (d < T(0))) return {};     // crossing
    T mid = (c + d) / T(2);
    T r = std::fabs(d - c) / T(2);
    T val = std::fabs(mid) / r;
    if (val <= T(1)) return {};
    T h2 = mid * mid - r * r;
    return {std::acosh(val), std::log(h2) / T(2), true};
}

}  // namespace hypsurf::detail

#include "hypsurf/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <unordered_set>

#include "hypsurf/detail/kernel.hpp"

namespace hypsurf {

namespace {

constexpr double pi = std::numbers::pi;

struct KahanSum {
    double total = 0, carry = 0;

    void add(double v) {
        double y = v - carry;
        double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

// Series is used for arguments <= 1/2, where 2^-k decay reaches 1e-16 fast.
double li2_series(double x) {
    double term = x, sum = x;
    for (int k = 2; k < 80; ++k) {
        term *= x;
        double add = term / (k * double(k));
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

double rogers_dilog(double x) {
    if (x < -1e-12 || x > 1 + 1e-12)
        fail(errc::domain_error, "rogers_dilog: argument outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    if (x == 0) return 0;
    if (x == 1) return pi * pi / 6;
    if (x > 0.5) return pi * pi / 6 - rogers_dilog(1 - x);
    return li2_series(x) + 0.5 * std::log(x) * std::log1p(-x);
}

double mcshane_term_D(double b1, double x, double y) {
    if (!(b1 > 0) || !(x > 0) || !(y > 0))
        fail(errc::domain_error, "mcshane_term_D: lengths must be positive");
    double s = std::exp((x + y) / 2);
    return 2 * std::log1p(2 * std::sinh(b1 / 2) / (std::exp(-b1 / 2) + s));
}

double mirzakhani_term_R(double b1, double bi, double eta) {
    if (!(b1 > 0) || !(bi > 0) || !(eta > 0))
        fail(errc::domain_error, "mirzakhani_term_R: arguments must be positive");
    double c = std::cosh(bi / 2);
    return b1 - std::log((c + std::cosh((b1 + eta) / 2)) / (c + std::cosh((b1 - eta) / 2)));
}

namespace {

struct TraceTriple {
    double x, y, z;
};

TraceTriple admissible_triple(const SurfaceSpec& t) {
    if (t.kind != SurfaceSpec::OneHoledTorus)
        fail(errc::domain_error, "expected a one-holed torus spec");
    double x = t.params[0], y = t.params[1], z = t.params[2];
    if (!(x * x + y * y + z * z - x * y * z <= 1e-12))
        fail(errc::inadmissible_traces, "trace triple is not admissible");
    // xyz > 0, so either none or exactly two of the traces are negative; an
    // even sign flip gives the same surface with a positive triple.
    if (x < 0 && y < 0) x = -x, y = -y;
    if (x < 0 && z < 0) x = -x, z = -z;
    if (y < 0 && z < 0) y = -y, z = -z;
    // Descend to the minimal triple so traces only grow down the tree.
    for (;;) {
        if (x >= y && x >= z) {
            double x2 = y * z - x;
            if (x2 >= x - 1e-12) break;
            x = x2;
        } else if (y >= x && y >= z) {
            double y2 = x * z - y;
            if (y2 >= y - 1e-12) break;
            y = y2;
        } else {
            double z2 = x * y - z;
            if (z2 >= z - 1e-12) break;
            z = z2;
        }
    }
    return {x, y, z};
}

}  // namespace

std::vector<SlopeLength> simple_torus_spectrum(const SurfaceSpec& t, double length_cutoff) {
    auto [x, y, z] = admissible_triple(t);
    double tmax = 2 * std::cosh(length_cutoff / 2);
    std::vector<SlopeLength> out;
    auto emit = [&out](long long p, long long q, double tr) {
        if (q < 0 || (q == 0 && p < 0)) p = -p, q = -q;
        double a = std::fabs(tr);
        if (a <= 2) return;
        out.push_back({p, q, tr, 2 * std::acosh(a / 2)});
    };
    if (std::fabs(x) <= tmax) emit(0, 1, x);
    if (std::fabs(y) <= tmax) emit(1, 0, y);
    // Frame: edge (va, vb) with the previously visited triangle's opposite
    // trace tp; the unseen vertex is va+vb with trace ta*tb - tp.
    struct Frame {
        long long pa, qa;
        double ta;
        long long pb, qb;
        double tb;
        double tp;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 1, x, 1, 0, y, x * y - z});
    stack.push_back({0, 1, x, -1, 0, y, z});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        long long pm = f.pa + f.pb, qm = f.qa + f.qb;
        double tm = f.ta * f.tb - f.tp;
        if (std::fabs(tm) > tmax) continue;
        emit(pm, qm, tm);
        stack.push_back({f.pa, f.qa, f.ta, pm, qm, tm, f.tb});
        stack.push_back({pm, qm, tm, f.pb, f.qb, f.tb, f.ta});
    }
    std::sort(out.begin(), out.end(), [](const SlopeLength& u, const SlopeLength& v) {
        return std::tie(u.length, u.p, u.q) < std::tie(v.length, v.p, v.q);
    });
    return out;
}

double cusped_mcshane_sum(double length_cutoff) {
    SurfaceSpec cusped;
    cusped.kind = SurfaceSpec::OneHoledTorus;
    cusped.params = {3, 3, 3};
    KahanSum sum;
    for (const auto& s : simple_torus_spectrum(cusped, length_cutoff))
        sum.add(1 / (1 + std::exp(s.length)));
    return sum.total;
}

IdentityReport verify_mcshane(const SurfaceSpec& t, double length_cutoff) {
    auto [x, y, z] = admissible_triple(t);
    double bt = x * x + y * y + z * z - x * y * z - 2;  // boundary trace, <= -2
    if (!(std::fabs(bt) > 2 + 1e-12))
        fail(errc::domain_error, "verify_mcshane: boundary is a cusp, b1 = 0");
    double b1 = 2 * std::acosh(std::fabs(bt) / 2);
    KahanSum sum;
    int terms = 0;
    for (const auto& s : simple_torus_spectrum(t, length_cutoff)) {
        sum.add(mcshane_term_D(b1, s.length, s.length));
        ++terms;
    }
    double oracle = cusped_mcshane_sum(std::clamp(length_cutoff, 8.0, 25.0));
    IdentityReport rep;
    rep.surface = to_string(t);
    rep.identity = "mcshane";
    rep.cutoff = length_cutoff;
    rep.depth = 0;
    rep.terms = terms;
    rep.partial_sum = sum.total;
    rep.target_paper = b1 / 2;
    rep.target_alternative = b1;
    rep.residual_paper = rep.target_paper - rep.partial_sum;
    rep.residual_alternative = rep.target_alternative - rep.partial_sum;
    rep.convention_selected =
        std::fabs(oracle - 0.5) <= std::fabs(oracle - 0.25) ? "mirzakhani" : "paper";
    return rep;
}

namespace {

using ld = long double;
using mat = detail::tmat<ld>;
using axisld = detail::taxis<ld>;

axisld map_axis(const mat& m, const axisld& ax) {
    auto image = [&m](ld v, bool v_inf, ld& out) {
        ld num = v_inf ? m.a : m.a * v + m.b;
        ld den = v_inf ? m.c : m.c * v + m.d;
        if (den == 0) return false;
        out = num / den;
        return true;
    };
    ld q1 = 0, q2 = 0;
    bool i1 = !image(ax.p1, ax.inf1, q1);
    bool i2 = !image(ax.p2, false, q2);
    if (i1) return {0, q2, true};
    if (i2) return {0, q1, true};
    return {q1, q2, false};
}

struct ArcKey {
    int i, j;
    long long fi, fj, len;

    bool operator==(const ArcKey&) const = default;
};

struct ArcKeyHash {
    std::size_t operator()(const ArcKey& k) const {
        std::size_t h = std::hash<long long>()((k.i * 4 + k.j) * 1000003LL + k.len);
        h ^= std::hash<long long>()(k.fi) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<long long>()(k.fj) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

constexpr double arc_quantum = 1e-7;

// Buckets a foot coordinate together with its wrap-arounds near 0 and period.
void foot_buckets(ld f, ld period, long long out[6], int& count) {
    long long base = std::llround(f / arc_quantum);
    count = 0;
    for (int d = -1; d <= 1; ++d) out[count++] = base + d;
    if (f < 2 * arc_quantum || f > period - 2 * arc_quantum) {
        long long wrap = std::llround((f < period / 2 ? f + period : f - period) / arc_quantum);
        for (int d = -1; d <= 1; ++d) out[count++] = wrap + d;
    }
}

class ArcSet {
  public:
    // True when the arc is new; neighbors within a quantum count as present.
    bool try_add(int i, int j, ld fi, ld fj, ld li, ld lj, ld len) {
        long long bi[6], bj[6];
        int ni = 0, nj = 0;
        foot_buckets(fi, li, bi, ni);
        foot_buckets(fj, lj, bj, nj);
        long long bl = std::llround(len / arc_quantum);
        for (int a = 0; a < ni; ++a)
            for (int b = 0; b < nj; ++b)
                for (long long d = -1; d <= 1; ++d) {
                    if (keys_.count({i, j, bi[a], bj[b], bl + d})) return false;
                    if (i == j && keys_.count({i, j, bj[b], bi[a], bl + d})) return false;
                }
        keys_.insert({i, j, bi[1], bj[1], bl});
        return true;
    }

  private:
    std::unordered_set<ArcKey, ArcKeyHash> keys_;
};

}  // namespace

std::vector<Orthogeodesic> orthogeodesic_spectrum(const SurfaceSpec& spec, double length_cutoff,
                                                  int depth) {
    if (spec.kind != SurfaceSpec::PairOfPants)
        fail(errc::domain_error, "expected a pair of pants spec");
    for (double l : spec.params)
        if (l == 0) fail(errc::cusped_boundary, "orthogeodesics need geodesic boundary");
    if (depth < 0) fail(errc::empty_ball, "orthogeodesic_spectrum: negative depth");
    FuchsianGroup G = build_surface(spec);

    mat g1{G.generators[0].a, G.generators[0].b, G.generators[0].c, G.generators[0].d};
    mat g2{G.generators[1].a, G.generators[1].b, G.generators[1].c, G.generators[1].d};
    mat boundary[3] = {g1, g2, detail::inv(detail::mul(g1, g2))};
    axisld axes[3];
    ld lengths[3];
    for (int k = 0; k < 3; ++k) {
        axes[k] = detail::axis_of(boundary[k]);
        lengths[k] = 2 * std::acosh(std::fabs(detail::tr(boundary[k])) / 2);
    }

    auto mod_length = [](ld f, ld period) {
        f = std::fmod(f, period);
        return f < 0 ? f + period : f;
    };

    // A conjugator padded with boundary letters names the same arc as its
    // stripped core but evaluates a boundary power at its own fixed points,
    // which amplifies rounding exponentially. Keeping only representatives
    // with no peripheral prefix on the left side and no peripheral suffix on
    // the right side makes every surviving evaluation well conditioned.
    const std::vector<int> periph[3] = {{1}, {2}, {-2, -1}};
    auto matches = [](const std::vector<int>& w, std::size_t at, const std::vector<int>& p) {
        if (w.size() < at + p.size()) return false;
        bool fwd = true, rev = true;
        for (std::size_t t = 0; t < p.size(); ++t) {
            fwd = fwd && w[at + t] == p[t];
            rev = rev && w[at + t] == -p[p.size() - 1 - t];
        }
        return fwd || rev;
    };

    ArcSet seen;
    std::vector<Orthogeodesic> out;
    auto visit = [&](const std::vector<int>& letters, const mat& w, const mat& winv) {
        for (int i = 0; i < 3; ++i) {
            if (matches(letters, 0, periph[i])) continue;
            for (int j = i; j < 3; ++j) {
                if (letters.size() >= periph[j].size() &&
                    matches(letters, letters.size() - periph[j].size(), periph[j]))
                    continue;
                auto near = detail::perp_between(axes[i], map_axis(w, axes[j]));
                if (!near.ok || near.distance > length_cutoff + 1e-12) continue;
                auto far = detail::perp_between(axes[j], map_axis(winv, axes[i]));
                if (!far.ok) continue;
                ld fi = mod_length(near.foot, lengths[i]);
                ld fj = mod_length(far.foot, lengths[j]);
                if (!seen.try_add(i, j, fi, fj, lengths[i], lengths[j], near.distance)) continue;
                Orthogeodesic arc;
                arc.i = i;
                arc.j = j;
                arc.length = static_cast<double>(near.distance);
                arc.foot_i = static_cast<double>(fi);
                arc.foot_j = static_cast<double>(fj);
                out.push_back(arc);
            }
        }
    };

    // Depth-first sweep over freely reduced words, products kept in long
    // double so deep conjugations stay well inside the dedup quantum.
    mat step[4] = {g1, detail::inv(g1), g2, detail::inv(g2)};
    struct Node {
        mat w, winv;
        std::vector<int> letters;
        int last;  // index into step of the final letter
    };
    std::vector<Node> stack;
    stack.push_back({detail::ident<ld>(), detail::ident<ld>(), {}, -1});
    while (!stack.empty()) {
        Node n = std::move(stack.back());
        stack.pop_back();
        visit(n.letters, n.w, n.winv);
        if (static_cast<int>(n.letters.size()) == depth) continue;
        for (int s = 0; s < 4; ++s) {
            if (n.last >= 0 && (s ^ 1) == n.last) continue;
            Node child{detail::mul(n.w, step[s]), detail::mul(step[s ^ 1], n.winv), n.letters, s};
            child.letters.push_back(s < 2 ? (s == 0 ? 1 : -1) : (s == 2 ? 2 : -2));
            stack.push_back(std::move(child));
        }
    }

    std::sort(out.begin(), out.end(), [](const Orthogeodesic& u, const Orthogeodesic& v) {
        return std::tie(u.length, u.i, u.j, u.foot_i, u.foot_j) <
               std::tie(v.length, v.i, v.j, v.foot_i, v.foot_j);
    });
    return out;
}

IdentityReport verify_bridgeman(const SurfaceSpec& spec, double length_cutoff, int depth) {
    auto spectrum = orthogeodesic_spectrum(spec, length_cutoff, depth);
    KahanSum sum;
    for (const auto& arc : spectrum) {
        double c = std::cosh(arc.length / 2);
        sum.add(rogers_dilog(1 / (c * c)));
    }
    IdentityReport rep;
    rep.surface = to_string(spec);
    rep.identity = "bridgeman";
    rep.cutoff = length_cutoff;
    rep.depth = depth;
    rep.terms = static_cast<int>(spectrum.size());
    rep.partial_sum = sum.total;
    rep.target_paper = pi * pi / 2;
    rep.target_alternative = rep.target_paper;
    rep.residual_paper = rep.target_paper - rep.partial_sum;
    rep.residual_alternative = rep.residual_paper;
    rep.convention_selected = "paper";
    return rep;
}

}  // namespace hypsurf

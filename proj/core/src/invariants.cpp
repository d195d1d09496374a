#include "hypsurf/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

namespace hypsurf {

namespace {

double displacement_at(const MoebiusMap& m, const HPoint& p) { return dist(p, apply(m, p)); }

// Min displacement at p over the non-identity part of a precomputed ball.
double min_displacement(const std::vector<BallEntry>& entries, const HPoint& p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < entries.size(); ++k)
        best = std::min(best, displacement_at(entries[k].map, p));
    return best;
}

int worker_count() {
    if (const char* env = std::getenv("HYPSURF_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

}  // namespace

InjRadReport injrad_at(const FuchsianGroup& G, const HPoint& p, int depth) {
    if (depth < 1) fail(errc::empty_ball, "injrad_at: depth must be >= 1");
    auto entries = ball(G, depth);
    InjRadReport rep;
    rep.point = p;
    rep.depth = depth;
    double best = std::numeric_limits<double>::infinity();
    double floor = std::numeric_limits<double>::infinity();
    std::vector<double> disp(entries.size(), 0);
    for (std::size_t k = 1; k < entries.size(); ++k) {
        disp[k] = displacement_at(entries[k].map, p);
        best = std::min(best, disp[k]);
        if (static_cast<int>(entries[k].word.size()) == depth) floor = std::min(floor, disp[k]);
    }
    rep.radius = best / 2;
    rep.floor_certificate = floor;
    rep.certified = floor >= 2 * rep.radius;
    // One entry per geodesic loop: a word and its inverse displace alike.
    std::set<std::vector<int>> loops;
    for (std::size_t k = 1; k < entries.size(); ++k) {
        if (disp[k] > best + 1e-6) continue;
        Word w = entries[k].word, wi = inverse(w);
        if (word_less(wi, w)) w = wi;
        if (loops.insert(w.letters).second) rep.realizing_words.push_back(w);
    }
    return rep;
}

SupInjRadReport sup_injrad(const FuchsianGroup& G, const SamplingBox& region, int grid,
                           int refine_iters, int depth) {
    if (grid < 2 || region.x_max <= region.x_min || region.y_max <= region.y_min ||
        region.y_min <= 0)
        fail(errc::degenerate_region, "sup_injrad: need grid >= 2 and a box inside the half-plane");
    auto entries = ball(G, depth);
    if (entries.size() <= 1) fail(errc::empty_ball, "sup_injrad: ball has no non-identity element");

    auto value = [&entries](double x, double y) { return min_displacement(entries, {x, y}) / 2; };

    std::vector<double> cell(static_cast<std::size_t>(grid) * grid);
    auto point_at = [&](int i, int j) {
        double x = region.x_min + (region.x_max - region.x_min) * i / (grid - 1);
        double y = region.y_min + (region.y_max - region.y_min) * j / (grid - 1);
        return HPoint{x, y};
    };
    int workers = std::min(worker_count(), grid);
    auto run_rows = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            for (int j = 0; j < grid; ++j) {
                HPoint p = point_at(i, j);
                cell[static_cast<std::size_t>(i) * grid + j] = value(p.x, p.y);
            }
    };
    if (workers <= 1) {
        run_rows(0, grid);
    } else {
        std::vector<std::thread> pool;
        int chunk = (grid + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_rows, w * chunk, std::min(grid, (w + 1) * chunk));
        for (auto& t : pool) t.join();
    }
    int bi = 0, bj = 0;
    double best = -1;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            if (double v = cell[static_cast<std::size_t>(i) * grid + j]; v > best) {
                best = v;
                bi = i;
                bj = j;
            }

    // The radius is a min of smooth displacement sheets, so the peak sits on
    // a crease where several sheets tie. Simplex ascent walks onto the crease
    // where coordinate-wise line searches stall, one restart per refine pass.
    auto clamped = [&](double x, double y) {
        x = std::clamp(x, region.x_min, region.x_max);
        y = std::clamp(y, std::max(region.y_min / 16, 1e-6), region.y_max);
        return HPoint{x, y};
    };
    struct Vertex {
        HPoint p;
        double f;
    };
    auto make_vertex = [&](double x, double y) {
        HPoint p = clamped(x, y);
        return Vertex{p, value(p.x, p.y)};
    };
    HPoint at = point_at(bi, bj);
    double fat = best;
    double hx = (region.x_max - region.x_min) / (grid - 1);
    double hy = (region.y_max - region.y_min) / (grid - 1);
    for (int round = 0; round < refine_iters; ++round) {
        Vertex s[3] = {Vertex{at, fat}, make_vertex(at.x + hx, at.y),
                       make_vertex(at.x, at.y + hy)};
        for (int it = 0; it < 200; ++it) {
            std::sort(s, s + 3, [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
            double span = std::max({std::fabs(s[0].p.x - s[2].p.x), std::fabs(s[0].p.y - s[2].p.y),
                                    std::fabs(s[1].p.x - s[2].p.x),
                                    std::fabs(s[1].p.y - s[2].p.y)});
            if (span < 1e-10 && s[0].f - s[2].f < 1e-13) break;
            double cx = (s[0].p.x + s[1].p.x) / 2, cy = (s[0].p.y + s[1].p.y) / 2;
            Vertex refl = make_vertex(2 * cx - s[2].p.x, 2 * cy - s[2].p.y);
            if (refl.f > s[0].f) {
                Vertex expand = make_vertex(3 * cx - 2 * s[2].p.x, 3 * cy - 2 * s[2].p.y);
                s[2] = expand.f > refl.f ? expand : refl;
            } else if (refl.f > s[1].f) {
                s[2] = refl;
            } else {
                Vertex contract = make_vertex((cx + s[2].p.x) / 2, (cy + s[2].p.y) / 2);
                if (contract.f > s[2].f) {
                    s[2] = contract;
                } else {
                    s[1] = make_vertex((s[0].p.x + s[1].p.x) / 2, (s[0].p.y + s[1].p.y) / 2);
                    s[2] = make_vertex((s[0].p.x + s[2].p.x) / 2, (s[0].p.y + s[2].p.y) / 2);
                }
            }
        }
        std::sort(s, s + 3, [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
        at = s[0].p;
        fat = s[0].f;
        hx /= 8;
        hy /= 8;
    }

    SupInjRadReport rep;
    rep.grid = grid;
    rep.depth = depth;
    rep.at_argmax = injrad_at(G, at, depth);
    rep.argmax = at;
    rep.lower = rep.at_argmax.radius;
    return rep;
}

SystoleReport systoles(const FuchsianGroup& G, int depth, double trace_bound) {
    auto classes = conjugacy_classes(G, trace_bound, depth);
    if (classes.empty()) fail(errc::no_hyperbolic_class, "systoles: no hyperbolic class in ball");
    SystoleReport rep;
    rep.depth = depth;
    rep.classes_considered = static_cast<int>(classes.size());
    // Classes come sorted by length; certify upward until the first crossing.
    for (auto& cls : classes) {
        cls.simplicity = simplicity(G, cls, depth);
        if (cls.simplicity.kind == SimplicityStatus::NonSimple) {
            rep.nonsimple_length = cls.length;
            rep.nonsimple_shortest = cls;
            break;
        }
    }
    rep.length = classes.front().length;
    rep.shortest = classes.front();
    return rep;
}

namespace {

// {Im > 1} embeds in the quotient iff no ball element has 0 < |c| < 1. The
// last answer is memoized; property sweeps query one group many times.
bool half_plane_embedded(const FuchsianGroup& G, int depth) {
    thread_local std::vector<double> memo_key;
    thread_local bool memo_val = false;
    std::vector<double> key;
    key.reserve(G.generators.size() * 4 + 1);
    for (const auto& g : G.generators) {
        key.push_back(g.a);
        key.push_back(g.b);
        key.push_back(g.c);
        key.push_back(g.d);
    }
    key.push_back(depth);
    if (key == memo_key) return memo_val;
    bool ok = true;
    for (const auto& e : ball(G, depth)) {
        double c = std::fabs(e.map.c);
        if (c > 1e-12 && c < 1 - 1e-9) {
            ok = false;
            break;
        }
    }
    memo_key = std::move(key);
    memo_val = ok;
    return ok;
}

}  // namespace

PenetrationBound axis_penetration_bound(const FuchsianGroup& G, const Word& w, const HPoint& z0) {
    if (!G.cusp || !G.cusp->normalized)
        fail(errc::precondition_violated, "axis_penetration_bound: group is not cusp-normalized");
    if (!(z0.y >= std::sqrt(3.0) - 1e-12))
        fail(errc::precondition_violated, "axis_penetration_bound: Im(z0) < sqrt(3)");
    MoebiusMap m = evaluate(G, w);
    if (classify(m) != MapClass::Hyperbolic)
        fail(errc::precondition_violated, "axis_penetration_bound: word is not hyperbolic");
    Geodesic ax = axis(m);
    if (!ax.vertical && !(ax.radius > 1))
        fail(errc::precondition_violated, "axis_penetration_bound: axis stays below height 1");
    if (!half_plane_embedded(G, 6))
        fail(errc::precondition_violated, "axis_penetration_bound: {Im > 1} is not embedded");
    PenetrationBound out;
    out.lhs = std::sinh(displacement(m, z0).value / 2);
    out.holds = out.lhs > 2 / std::sqrt(3.0);
    return out;
}

}  // namespace hypsurf

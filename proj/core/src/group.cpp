#include "hypsurf/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <utility>

namespace hypsurf {

namespace {

// Order letters by generator index first, inverses after the plain letter.
int letter_key(int l) {
    int k = std::abs(l);
    return 2 * (k - 1) + (l < 0 ? 1 : 0);
}

void push_reduced(std::vector<int>& out, int l) {
    if (!out.empty() && out.back() == -l)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

Word reduce(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (int l : w.letters) {
        if (l == 0) fail(errc::index_out_of_range, "word letter 0 is not a generator");
        push_reduced(out.letters, l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word concat(const Word& w1, const Word& w2) {
    Word out = reduce(w1);
    for (int l : w2.letters) push_reduced(out.letters, l);
    return out;
}

Word cyclic_reduction(const Word& w) {
    Word out = reduce(w);
    std::size_t lo = 0, hi = out.letters.size();
    while (hi - lo >= 2 && out.letters[lo] == -out.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    out.letters.assign(out.letters.begin() + lo, out.letters.begin() + hi);
    return out;
}

bool word_less(const Word& w1, const Word& w2) {
    if (w1.letters.size() != w2.letters.size()) return w1.letters.size() < w2.letters.size();
    for (std::size_t i = 0; i < w1.letters.size(); ++i) {
        int k1 = letter_key(w1.letters[i]), k2 = letter_key(w2.letters[i]);
        if (k1 != k2) return k1 < k2;
    }
    return false;
}

bool is_primitive_class(const Word& w) {
    Word c = cyclic_reduction(w);
    std::size_t n = c.letters.size();
    if (n == 0) return false;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (std::size_t t = d; t < n && periodic; ++t)
            periodic = c.letters[t] == c.letters[t - d];
        if (periodic) return false;
    }
    return true;
}

Word class_representative(const Word& w) {
    Word u = cyclic_reduction(w);
    if (u.empty()) return u;
    Word best = u;
    auto scan = [&best](const Word& v) {
        Word rot = v;
        for (std::size_t i = 0; i < v.letters.size(); ++i) {
            std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
            if (word_less(rot, best)) best = rot;
        }
    };
    scan(u);
    scan(inverse(u));
    return best;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int l : w.letters) {
        if (!out.empty()) out += ' ';
        out += 'g' + std::to_string(std::abs(l) - 1);
        if (l < 0) out += "^-1";
    }
    return out;
}

std::string to_string(const FuchsianGroup& G, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int l : w.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
        if (!out.empty()) out += ' ';
        if (i < G.generator_labels.size() && !G.generator_labels[i].empty())
            out += G.generator_labels[i];
        else
            out += 'g' + std::to_string(i);
        if (l < 0) out += "^-1";
    }
    return out;
}

MoebiusMap evaluate(const FuchsianGroup& G, const Word& w) {
    MoebiusMap m;
    for (int l : w.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
        if (l == 0 || i >= G.generators.size())
            fail(errc::index_out_of_range, "word letter " + std::to_string(l) + " out of range");
        m = compose(m, l > 0 ? G.generators[i] : inverse(G.generators[i]));
    }
    return m;
}

long long ball_size(int rank, int max_word_length) {
    long long total = 1, layer = 2LL * rank;
    for (int k = 1; k <= max_word_length; ++k) {
        total += layer;
        layer *= 2LL * rank - 1;
    }
    return total;
}

std::vector<BallEntry> ball(const FuchsianGroup& G, int max_word_length) {
    if (!G.assumed_free) fail(errc::not_free, "ball enumeration needs assumed_free");
    int rank = static_cast<int>(G.generators.size());
    std::vector<MoebiusMap> step(2 * rank);
    for (int i = 0; i < rank; ++i) {
        step[2 * i] = G.generators[i];
        step[2 * i + 1] = inverse(G.generators[i]);
    }
    std::vector<BallEntry> out;
    out.reserve(static_cast<std::size_t>(ball_size(rank, max_word_length)));
    out.push_back({Word{}, MoebiusMap{}});
    std::size_t layer_begin = 0, layer_end = 1;
    for (int k = 1; k <= max_word_length; ++k) {
        for (std::size_t j = layer_begin; j < layer_end; ++j) {
            int last = out[j].word.letters.empty() ? 0 : out[j].word.letters.back();
            for (int i = 0; i < rank; ++i) {
                for (int sign : {1, -1}) {
                    int l = sign * (i + 1);
                    if (l == -last) continue;
                    BallEntry e;
                    e.word = out[j].word;
                    e.word.letters.push_back(l);
                    e.map = compose(out[j].map, step[2 * i + (sign < 0)]);
                    out.push_back(std::move(e));
                }
            }
        }
        layer_begin = layer_end;
        layer_end = out.size();
    }
    return out;
}

std::vector<ConjClass> conjugacy_classes(const FuchsianGroup& G, double max_trace, int depth) {
    if (depth < 1) fail(errc::precondition_violated, "conjugacy_classes: depth must be >= 1");
    std::map<std::vector<int>, ConjClass> seen;
    for (const auto& e : ball(G, depth)) {
        if (e.word.empty()) continue;
        Word rep = class_representative(e.word);
        if (rep.empty() || seen.count(rep.letters)) continue;
        MoebiusMap m = evaluate(G, rep);
        if (classify(m) != MapClass::Hyperbolic) continue;
        double t = std::fabs(trace(m));
        if (t > max_trace + 1e-12) continue;
        ConjClass cls;
        cls.rep = rep;
        cls.trace = trace(m);
        cls.length = translation_length(m);
        seen.emplace(rep.letters, std::move(cls));
    }
    std::vector<ConjClass> out;
    out.reserve(seen.size());
    for (auto& [_, cls] : seen) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const ConjClass& p, const ConjClass& q) {
        if (p.length != q.length) return p.length < q.length;
        return word_less(p.rep, q.rep);
    });
    return out;
}

SimplicityStatus simplicity(const FuchsianGroup& G, const ConjClass& cls, int depth) {
    MoebiusMap g = evaluate(G, cls.rep);
    if (classify(g) != MapClass::Hyperbolic)
        fail(errc::not_hyperbolic, "simplicity: class is not hyperbolic");
    Geodesic ax = axis(g);
    Word rep_inv = inverse(cls.rep);
    for (const auto& e : ball(G, depth)) {
        if (e.word.empty()) continue;
        // A conjugator commuting with the rep moves the axis to itself;
        // testing that pair only measures rounding noise.
        Word moved = reduce(concat(concat(e.word, cls.rep), inverse(e.word)));
        if (moved == cls.rep || moved == rep_inv) continue;
        MoebiusMap conj = compose(compose(e.map, g), inverse(e.map));
        if (classify(conj) != MapClass::Hyperbolic) continue;
        GeodesicRelation rel = geodesics_relation(ax, axis(conj));
        if (rel.kind == GeodesicRelationKind::Crossing) {
            // Recheck so a returned witness is sound on its own.
            if (geodesics_relation(ax, axis(conj)).kind != GeodesicRelationKind::Crossing) continue;
            SimplicityStatus s;
            s.kind = SimplicityStatus::NonSimple;
            s.depth = depth;
            s.witness = e.word;
            return s;
        }
    }
    SimplicityStatus s;
    s.kind = SimplicityStatus::Simple;
    s.depth = depth;
    return s;
}

FuchsianGroup conjugate_group(const FuchsianGroup& G, const MoebiusMap& g) {
    FuchsianGroup out = G;
    MoebiusMap gi = inverse(g);
    for (auto& m : out.generators) m = compose(compose(g, m), gi);
    if (out.cusp) out.cusp->normalized = false;
    return out;
}

namespace {

// Scans the depth-ball of a group with a cusp at infinity for the smallest
// nonzero |c|; elements fixing infinity are peripheral and skipped.
bool min_lower_left(const FuchsianGroup& G, int depth, double& min_c, Word& arg) {
    bool found = false;
    for (const auto& e : ball(G, depth)) {
        double c = std::fabs(e.map.c);
        if (c <= 1e-12) continue;
        if (!found || c < min_c - 1e-15) {
            min_c = c;
            arg = e.word;
            found = true;
        }
    }
    return found;
}

bool is_power_of(const Word& w, const Word& p) {
    if (p.empty()) return w.empty();
    if (w.letters.size() % p.letters.size() != 0) return false;
    Word pi = inverse(p);
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        std::size_t j = i % p.letters.size();
        if (w.letters[i] != p.letters[j] && w.letters[i] != pi.letters[j]) return false;
    }
    // Mixed directions would have cancelled under free reduction.
    return true;
}

}  // namespace

FuchsianGroup cusp_normalize(const FuchsianGroup& G, const Word& parabolic, int depth) {
    Word pw = reduce(parabolic);
    MoebiusMap M = evaluate(G, pw);
    if (classify(M) != MapClass::Parabolic)
        fail(errc::not_parabolic, "cusp_normalize: word does not evaluate to a parabolic");
    if (trace(M) < 0) M = MoebiusMap{-M.a, -M.b, -M.c, -M.d};

    MoebiusMap sigma;  // moves the fixed point to infinity
    double omega0;
    if (std::fabs(M.c) <= 1e-12) {
        omega0 = M.b;
    } else {
        double t = (M.a - M.d) / (2 * M.c);
        sigma = moebius(0, -1, 1, -t);
        omega0 = -M.c;
    }
    if (omega0 < 0) {
        pw = inverse(pw);
        omega0 = -omega0;
    }

    FuchsianGroup moved = conjugate_group(G, sigma);
    double m0 = 0;
    Word arg;
    if (!min_lower_left(moved, depth, m0, arg))
        fail(errc::empty_ball, "cusp_normalize: no element with c != 0 in the ball");
    double lambda = std::pow(m0 / omega0, 0.25);
    FuchsianGroup out = conjugate_group(moved, moebius(lambda, 0, 0, 1 / lambda));

    // Single-letter peripherals become generator 0 as the translation z + omega.
    if (pw.letters.size() == 1) {
        std::size_t i = static_cast<std::size_t>(std::abs(pw.letters[0])) - 1;
        if (pw.letters[0] < 0) out.generators[i] = inverse(out.generators[i]);
        if (i != 0) {
            std::swap(out.generators[0], out.generators[i]);
            if (out.generator_labels.size() > i)
                std::swap(out.generator_labels[0], out.generator_labels[i]);
        }
        pw.letters = {1};
    }

    CuspData cusp;
    cusp.omega = std::sqrt(m0 * omega0);
    cusp.peripheral = pw;
    cusp.normalized = true;
    out.cusp = cusp;
    return out;
}

MaximalCusp maximal_cusp(const FuchsianGroup& G, int depth) {
    if (!G.cusp || !G.cusp->normalized)
        fail(errc::no_cusp, "maximal_cusp: group is not cusp-normalized");
    if (depth < 1) fail(errc::precondition_violated, "maximal_cusp: depth must be >= 1");
    const Word& peripheral = G.cusp->peripheral;
    MaximalCusp out;
    out.depth = depth;
    bool found = false;
    for (const auto& e : ball(G, depth)) {
        if (e.word.empty() || is_power_of(e.word, peripheral)) continue;
        double c = std::fabs(e.map.c);
        if (c <= 1e-12) continue;
        if (!found || c < out.min_c - 1e-15) {
            out.min_c = c;
            out.witness = e.word;
            found = true;
        }
    }
    if (!found) fail(errc::empty_ball, "maximal_cusp: no candidate element in the ball");
    out.height = 1 / out.min_c;
    out.area = G.cusp->omega * out.min_c;
    Horodisk top{BoundaryPoint::infinity(), out.height};
    HorodiskImage img = horodisk_image(evaluate(G, out.witness), top);
    out.tangency_confirmed = img.against_source == Tangency::Tangent &&
                             horodisk_tangency(top, img.image) == Tangency::Tangent;
    if (out.area < 4 - 1e-9)
        fail(errc::assertion_failed, "maximal_cusp: cusp area below 4");
    return out;
}

bool cusp_exclusion_check(const FuchsianGroup& G, const ConjClass& cls) {
    if (!G.cusp || !G.cusp->normalized)
        fail(errc::no_cusp, "cusp_exclusion_check: group is not cusp-normalized");
    if (cls.simplicity.kind != SimplicityStatus::Simple)
        fail(errc::not_simple, "cusp_exclusion_check: class lacks a Simple status");
    MoebiusMap g = evaluate(G, cls.rep);
    if (classify(g) != MapClass::Hyperbolic)
        fail(errc::not_hyperbolic, "cusp_exclusion_check: class is not hyperbolic");
    double omega = G.cusp->omega;
    double bound = std::sqrt(1 + omega * omega / 4) + 1e-9;
    for (const auto& e : ball(G, std::max(cls.simplicity.depth, 1))) {
        MoebiusMap conj = compose(compose(e.map, g), inverse(e.map));
        if (classify(conj) != MapClass::Hyperbolic) continue;
        Geodesic ax = axis(conj);
        double apex = ax.vertical ? std::numeric_limits<double>::infinity() : ax.radius;
        if (apex > bound) return false;
    }
    return true;
}

}  // namespace hypsurf

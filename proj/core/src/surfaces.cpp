#include "hypsurf/surfaces.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hypsurf {

namespace {

std::string format_params(const std::vector<double>& params) {
    std::string out;
    char buf[64];
    for (double p : params) {
        if (!out.empty()) out += ',';
        std::snprintf(buf, sizeof buf, "%g", p);
        out += buf;
    }
    return out;
}

}  // namespace

SurfaceSpec parse_surface_spec(const std::string& text) {
    SurfaceSpec spec;
    spec.area = 2 * std::numbers::pi;
    std::string head = text, tail;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        tail = text.substr(colon + 1);
    }
    if (head == "sphere3") {
        spec.kind = SurfaceSpec::ThricePuncturedSphere;
    } else if (head == "torus1") {
        spec.kind = SurfaceSpec::OneHoledTorus;
    } else if (head == "pants") {
        spec.kind = SurfaceSpec::PairOfPants;
    } else {
        fail(errc::parse_error, "unknown surface kind '" + head + "'");
    }
    if (!tail.empty()) {
        std::istringstream in(tail);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            std::size_t used = 0;
            double v = 0;
            try {
                v = std::stod(piece, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != piece.size() || piece.empty())
                fail(errc::parse_error, "bad surface parameter '" + piece + "'");
            spec.params.push_back(v);
        }
    }
    bool want_three = spec.kind != SurfaceSpec::ThricePuncturedSphere;
    if (spec.params.size() != (want_three ? 3u : 0u))
        fail(errc::parse_error, "surface '" + head + "' takes " + (want_three ? "3" : "0") +
                                    " parameters, got " + std::to_string(spec.params.size()));
    return spec;
}

std::string to_string(const SurfaceSpec& spec) {
    switch (spec.kind) {
        case SurfaceSpec::ThricePuncturedSphere: return "sphere3";
        case SurfaceSpec::OneHoledTorus: return "torus1:" + format_params(spec.params);
        case SurfaceSpec::PairOfPants: return "pants:" + format_params(spec.params);
    }
    return "?";
}

FuchsianGroup build_surface(const SurfaceSpec& spec) {
    switch (spec.kind) {
        case SurfaceSpec::ThricePuncturedSphere: return thrice_punctured_sphere();
        case SurfaceSpec::OneHoledTorus:
            return one_holed_torus(spec.params[0], spec.params[1], spec.params[2]);
        case SurfaceSpec::PairOfPants:
            return pair_of_pants(spec.params[0], spec.params[1], spec.params[2]);
    }
    fail(errc::parse_error, "bad surface kind");
}

FuchsianGroup thrice_punctured_sphere() {
    FuchsianGroup G;
    G.label = "sphere3";
    G.generators = {moebius(1, 2, 0, 1), moebius(-1, 0, 2, -1)};
    G.generator_labels = {"x", "gamma"};
    G.assumed_free = true;
    CuspData cusp;
    cusp.omega = 2;
    cusp.peripheral.letters = {1};
    cusp.normalized = true;
    G.cusp = cusp;
    return G;
}

FuchsianGroup one_holed_torus(double x, double y, double z) {
    double q = x * x + y * y + z * z - x * y * z;
    if (!(q <= 1e-12))
        fail(errc::inadmissible_traces, "one_holed_torus: boundary trace above -2");
    double lam = (x + std::copysign(std::sqrt(x * x - 4), x)) / 2;
    double p = (z - y / lam) / (lam - 1 / lam);
    double s = y - p;
    FuchsianGroup G;
    G.label = "torus1:" + format_params({x, y, z});
    G.generators = {moebius(lam, 0, 0, 1 / lam), moebius(p, p * s - 1, 1, s)};
    G.generator_labels = {"a", "b"};
    G.assumed_free = true;
    return G;
}

namespace {

std::pair<MoebiusMap, MoebiusMap> pants_generators(double l1, double l2, double l3) {
    if (l1 == 0 && l2 == 0 && l3 == 0) {
        FuchsianGroup S = thrice_punctured_sphere();
        return {S.generators[0], S.generators[1]};
    }
    if (l1 == 0) {
        // Rotate the cuff labels so the first length is positive, then route
        // the generators back: boundaries of (h1, h2) are l2, l3, l1.
        auto [h1, h2] = pants_generators(l2, l3, l1);
        return {inverse(compose(h1, h2)), h1};
    }
    double u = std::exp(l1 / 2);
    MoebiusMap g1 = moebius(u, 0, 0, 1 / u);
    if (l2 == 0) {
        double k = (std::cosh(l1 / 2) + std::cosh(l3 / 2)) / std::sinh(l1 / 2);
        return {g1, moebius(1 - k, k, -k, 1 + k)};
    }
    double sigma = 0.5 * std::log((std::cosh((l1 + l2) / 2) + std::cosh(l3 / 2)) /
                                  (std::cosh((l1 - l2) / 2) + std::cosh(l3 / 2)));
    double es = std::exp(sigma), r = std::sqrt(2 * std::sinh(sigma));
    MoebiusMap T = moebius(es / r, 1 / (es * r), 1 / r, 1 / r);
    double v = std::exp(l2 / 2);
    MoebiusMap g2 = compose(compose(T, moebius(1 / v, 0, 0, v)), inverse(T));
    return {g1, g2};
}

}  // namespace

FuchsianGroup pair_of_pants(double l1, double l2, double l3) {
    if (l1 < 0 || l2 < 0 || l3 < 0)
        fail(errc::negative_length, "pair_of_pants: boundary lengths must be >= 0");
    auto [g1, g2] = pants_generators(l1, l2, l3);
    FuchsianGroup G;
    G.label = "pants:" + format_params({l1, l2, l3});
    G.generators = {g1, g2};
    G.generator_labels = {"g1", "g2"};
    G.assumed_free = true;
    return G;
}

FunnelData funnel_modulus(double boundary_length) {
    if (!(boundary_length > 0))
        fail(errc::non_positive_length, "funnel_modulus: boundary length must be positive");
    return {boundary_length, std::numbers::pi * std::numbers::pi / boundary_length};
}

double core_length_from_modulus(double m) {
    if (!(m > 0)) fail(errc::non_positive_length, "core_length_from_modulus: modulus must be positive");
    return std::numbers::pi * std::numbers::pi / m;
}

}  // namespace hypsurf

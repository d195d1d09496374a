#pragma once

#include <optional>
#include <vector>

#include "hypsurf/geometry.hpp"
#include "hypsurf/group.hpp"

namespace hypsurf {

struct InjRadReport {
    HPoint point;
    double radius = 0;
    std::vector<Word> realizing_words;  // displacement within 1e-6 of the min, one per loop
    int depth = 0;
    double floor_certificate = 0;  // min displacement over the depth-boundary sphere
    bool certified = false;        // floor_certificate >= 2 * radius
};

InjRadReport injrad_at(const FuchsianGroup& G, const HPoint& p, int depth);

struct SamplingBox {
    double x_min = -1, x_max = 1;
    double y_min = 0.1, y_max = 3;
};

struct SupInjRadReport {
    double lower = 0;
    HPoint argmax;
    InjRadReport at_argmax;
    int grid = 0;
    int depth = 0;
};

/// Grid sweep of injrad_at over the box plus simplex ascent around the best
/// cell; a lower bound for sup R_x, not a certificate.
SupInjRadReport sup_injrad(const FuchsianGroup& G, const SamplingBox& region, int grid,
                           int refine_iters, int depth);

struct SystoleReport {
    double length = 0;
    ConjClass shortest;
    std::optional<double> nonsimple_length;
    std::optional<ConjClass> nonsimple_shortest;  // carries the crossing witness
    int depth = 0;
    int classes_considered = 0;
};

SystoleReport systoles(const FuchsianGroup& G, int depth, double trace_bound);

struct PenetrationBound {
    double lhs = 0;  // sinh(displacement/2)
    bool holds = false;
};

/// Displacement bound at points above the cusp region: requires Im(z0) >= sqrt(3),
/// a hyperbolic word whose axis reaches above height 1, and {Im > 1} embedded
/// (maximal cusp height <= 1). Then sinh(d/2) > 2/sqrt(3).
PenetrationBound axis_penetration_bound(const FuchsianGroup& G, const Word& w, const HPoint& z0);

}  // namespace hypsurf

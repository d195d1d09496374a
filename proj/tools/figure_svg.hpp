#pragma once

#include <string>

#include "hypsurf/group.hpp"

namespace hypsurf::figure {

struct Options {
    int depth = 3;
    double x_min = -2.5;
    double x_max = 2.5;
    double y_max = 2.2;
    double scale = 220;  // pixels per half-plane unit
};

struct Counts {
    int isometric_circles = 0;
    int axes = 0;
    int horodisks = 0;
};

/// Static SVG 1.1 picture of the depth ball: isometric circles, axes of
/// hyperbolic elements, and (when the group is cusp-normalized) the maximal
/// horodisk at infinity with its tangent images.
std::string render(const FuchsianGroup& G, const Options& opt, Counts& counts);

}  // namespace hypsurf::figure

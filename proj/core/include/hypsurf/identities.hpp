#pragma once

#include <string>
#include <vector>

#include "hypsurf/surfaces.hpp"

namespace hypsurf {

/// R(x) = Li2(x) + ln(x) ln(1-x)/2 on [0,1]; R(1) = pi^2/6.
double rogers_dilog(double x);

double mcshane_term_D(double b1, double x, double y);
double mirzakhani_term_R(double b1, double bi, double eta);

struct IdentityReport {
    std::string surface;
    std::string identity;  // "mcshane" or "bridgeman"
    double cutoff = 0;
    int depth = 0;
    int terms = 0;
    double partial_sum = 0;
    double target_paper = 0;
    double target_alternative = 0;
    double residual_paper = 0;
    double residual_alternative = 0;
    std::string convention_selected;
};

struct SlopeLength {
    long long p = 0, q = 1;
    double trace = 0;
    double length = 0;
};

/// Simple closed geodesics of a one-holed torus up to the length cutoff, one
/// per slope, by the trace recursion (x, y, z) -> (x, z, xz - y) on the tree
/// of triples.
std::vector<SlopeLength> simple_torus_spectrum(const SurfaceSpec& t, double length_cutoff);

/// Sum of 1/(1+e^l) over the simple spectrum of the (3,3,3) punctured torus;
/// converges to 1/2 and pins the summation convention.
double cusped_mcshane_sum(double length_cutoff);

IdentityReport verify_mcshane(const SurfaceSpec& t, double length_cutoff);

struct Orthogeodesic {
    int i = 0, j = 0;   // boundary indices, i <= j
    double length = 0;
    double foot_i = 0;  // perpendicular foot along boundary i, mod its length
    double foot_j = 0;
};

std::vector<Orthogeodesic> orthogeodesic_spectrum(const SurfaceSpec& p, double length_cutoff,
                                                  int depth);

IdentityReport verify_bridgeman(const SurfaceSpec& p, double length_cutoff, int depth);

}  // namespace hypsurf

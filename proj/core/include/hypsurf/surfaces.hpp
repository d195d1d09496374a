#pragma once

#include <string>
#include <vector>

#include "hypsurf/group.hpp"

namespace hypsurf {

struct SurfaceSpec {
    enum Kind { ThricePuncturedSphere, OneHoledTorus, PairOfPants };
    Kind kind = ThricePuncturedSphere;
    std::vector<double> params;  // torus1: traces x,y,z; pants: lengths l1,l2,l3
    double area = 0;             // always 2 pi, Euler characteristic -1
};

/// Accepts "sphere3", "torus1:x,y,z", "pants:a,b,c".
SurfaceSpec parse_surface_spec(const std::string& text);
std::string to_string(const SurfaceSpec& spec);
FuchsianGroup build_surface(const SurfaceSpec& spec);

/// Congruence group mod 2, generated by z -> z+2 and z -> -z/(2z-1).
FuchsianGroup thrice_punctured_sphere();

/// Generators A, B with tr A = x, tr B = y, tr AB = z; boundary is the
/// commutator, trace x^2+y^2+z^2-xyz-2.
FuchsianGroup one_holed_torus(double x, double y, double z);

/// Generators g1, g2 and g3 = (g1 g2)^-1 with |tr g_i| = 2 cosh(l_i/2);
/// length 0 gives a cusp.
FuchsianGroup pair_of_pants(double l1, double l2, double l3);

struct FunnelData {
    double boundary_length = 0;
    double modulus = 0;  // pi^2 / boundary_length
};

FunnelData funnel_modulus(double boundary_length);
double core_length_from_modulus(double m);

}  // namespace hypsurf

#pragma once

#include <array>
#include <vector>

#include "realspec/curvette.hpp"
#include "realspec/poly.hpp"
#include "realspec/regions.hpp"
#include "realspec/roots.hpp"

namespace realspec {

/// Rank-2 curvette x = t^(0,3), y = t^(0,4) + b t^(1,0), z = t^(0,5) + c t^(1,1).
SemiCurvette example_curvette(const Rat& b, const Rat& c, SignChar sc = SignChar::positive(2));

/// f1 = xz - y^2, f2 = x^3 - yz, f3 = x^2y - z^2.
std::array<Poly, 3> example_polys();
std::vector<BinomialRoot> example_roots();
RootSystem example_system();

/// y*f1 + (1/5)*x*f2, the sign changer reaching (1,8).
Poly example_separator();
/// {1, f1, f2, f3}.
std::vector<Poly> example_basis();
/// Values of x, y, z on the worked curvettes.
Weights example_weights();

/// Standard forms over {x, y, z, Q4, Q5, Q6}. The last one, x^2y^2 + Q4, is
/// dominated by x^2y^2 only while Q4's leading terms cancel.
std::vector<StandardForm> example_forms();
/// The value region with nu(x^2y^2) < nu(Q4) removed.
Region corrupted_region(const Region& c);

}  // namespace realspec

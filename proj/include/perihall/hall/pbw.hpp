#pragma once

// Ordered-product expansion for t = 3: every basis symbol u_[X + Y[1] + Z[2]]
// as a combination of products u_{Z[2]} * u_{Y[1]} * u_X of module symbols.
// The recursion peels off the leading term of the ordered product; every
// other term is strictly smaller in the dim-vector order, so it terminates.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "perihall/hall/algebra.hpp"

namespace perihall::hall {

using repcat::ClassId;

// (Z, Y, X): the modules placed at shifts 2, 1, 0.
using PbwKey = std::array<std::vector<ClassId>, 3>;
using PbwExpression = std::map<PbwKey, HallValue>;

// Requires an OrbitOracle.
PbwExpression pbw_expand(HallAlgebra& alg, const PeriodicObject& m);
HallVector pbw_evaluate(HallAlgebra& alg, const PbwExpression& e);
// Sum of terms "c · u^[2]_Z · u^[1]_Y · u^[0]_X", unit factors omitted.
std::string to_string(HallAlgebra& alg, const PbwExpression& e);

// N < M: every shift part of N has dim vector <= that of M, not all equal.
bool dim_order_less(const cyclecat::OrbitCategory& cat, const PeriodicObject& n, const PeriodicObject& m);

}  // namespace perihall::hall

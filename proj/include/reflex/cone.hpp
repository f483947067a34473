#pragma once

#include <vector>

#include "reflex/arith.hpp"

namespace reflex {

// Extreme rays of the dual cone {y : <g, y> >= 0 for all generators g},
// computed by the incremental double description method with the
// combinatorial adjacency test. Rays come back primitive, lex-sorted.
// If the dual cone contains a nontrivial lineality space, its basis vectors
// are reported as +/- pairs of rays.
std::vector<std::vector<Int>> dual_cone_rays(const std::vector<std::vector<Int>>& generators);

// Membership x in cone(generators), decided by exact LP.
bool in_cone_hull(const std::vector<std::vector<Int>>& generators, const std::vector<Int>& x);

}  // namespace reflex

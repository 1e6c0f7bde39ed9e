#pragma once

// Convex polytopes in V-representation, exact Minkowski sums, and the
// rational simplex engine underneath. Include this to get everything.

#include "minksum/types.hpp"
#include "minksum/polytope.hpp"
#include "minksum/lp.hpp"
#include "minksum/minkowski.hpp"
#include "minksum/io.hpp"

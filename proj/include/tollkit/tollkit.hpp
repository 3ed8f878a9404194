#pragma once

// Umbrella header for the toll-convexity toolkit: graphs, graph6 and edge
// list formats, small-graph enumeration, graph products, toll intervals and
// invariants, and the verification harness.

#include "tollkit/dot.hpp"
#include "tollkit/enumerate.hpp"
#include "tollkit/errors.hpp"
#include "tollkit/graph.hpp"
#include "tollkit/harness.hpp"
#include "tollkit/io.hpp"
#include "tollkit/products.hpp"
#include "tollkit/search.hpp"
#include "tollkit/toll.hpp"
#include "tollkit/vertex_set.hpp"

#pragma once

// Exact symbolic verification of the local relations satisfied by the
// bulk and boundary weights: both forms of the Yang-Baxter equation
// (crossing above/below a transversal line), both forms of the reflection
// equation, and both boundary unitarity equations.  Each relation is an
// equality, for every orientation of the external edges, of sums over
// internal orientations of products of vertex weights; the checks compare
// cleared weights as Laurent polynomials in q, u, v, w.

#include "trisix/report.hpp"

namespace trisix {

// rel: "YBE-vertical" | "YBE-horizontal" | "RE-left" | "RE-right" |
//      "BUE-left" | "BUE-right"
Report verify_local_relation(const std::string& rel);

// All six, merged.
Report verify_all_local_relations();

}  // namespace trisix

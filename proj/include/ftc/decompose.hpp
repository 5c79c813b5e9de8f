#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftc/graph.hpp"

namespace ftc {

// Partition of the edges into ceil(ell/2) parts, each spanning a subgraph of
// maximum degree <= 2; for odd ell the designated part is a matching.
struct Decomposition {
    std::vector<std::vector<int>> parts;  // edge ids per part
    std::optional<int> matching_index;    // set iff ell is odd
};

// Proper edge coloring as a list of matchings. Misra-Gries guarantees at
// most max_degree+1 classes; when it lands on max_degree+1, a bounded exact
// search tries to reach max_degree classes so that class-1 graphs pair up
// cleanly.
std::vector<std::vector<int>> edge_color(const Graph& g, long refine_budget = 1000000);

struct DecompositionSearch {
    std::optional<Decomposition> result;
    bool complete;  // true when a miss proves nonexistence
};

// ell-decomposition by edge-coloring fast path with class pairing, falling
// back to exhaustive backtracking over edge-to-part assignments with degree
// pruning and a node budget.
DecompositionSearch ell_decomposition(const Graph& g, int ell,
                                      long node_budget = 10000000);

std::vector<std::string> verify_decomposition(const Graph& g, const Decomposition& d, int ell);

}  // namespace ftc

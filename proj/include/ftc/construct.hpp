#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftc/decompose.hpp"
#include "ftc/graph.hpp"
#include "ftc/interval.hpp"
#include "ftc/lp.hpp"

namespace ftc {

// --------------------------------------------------- convex combination

// Combines per-factor weighted colorings with the matching's unit coloring
// into a single weighted 1/(delta+1+eps)-total coloring for odd delta >= 5.
// The inputs must satisfy the per-factor coverage bounds for eps' = eps/2
// (vertices >= 1/(delta+eps'), factor edges >= (delta-1)/(2(delta+eps'))).
// Every inequality is re-checked exactly; a violation throws with the exact
// rational slack in the message.
WeightedColoring compose_factor_colorings(const Graph& g, const Decomposition& decomp,
                                          const std::vector<WeightedColoring>& factor_colorings,
                                          const Rat& eps);

// Coverage floor delivered by the composition for every element.
Rat composed_coverage_floor(int delta, const Rat& eps);

// ------------------------------------------------------ tree recoloring

// Recolor a rooted tree so the root gets X and the root edge gets Y, while
// every element at depth d keeps its base color. The base coloring lives in
// [0, delta+1+eps_prime); the result lives in [0, delta+1+eps).
struct RecolorTask {
    Graph tree;
    int root = 0;                   // must be a leaf
    IntervalColoring base;          // ambient delta+1+eps_prime
    IntervalSet root_set;           // X: measure 1, inside [0, delta+1+eps)
    IntervalSet root_edge_set;      // Y: measure 1, disjoint from X
    int delta = 0;
    Rat eps, eps_prime;

    Rat band_width() const { return eps - eps_prime; }           // block measure
    long block_count() const;                                    // s
    int depth() const { return 2 * static_cast<int>(block_count()) + 1; }
    Rat ambient_low() const { return Rat(delta) + 1 + eps_prime; }
    Rat ambient_high() const { return Rat(delta) + 1 + eps; }
};

struct RecolorResult {
    IntervalColoring coloring;                 // ambient delta+1+eps, verified
    PiecewiseIsometry anchor;                  // the isometry carrying root/root-edge sets
    std::vector<PiecewiseIsometry> cascade;    // steps 0..2s
    std::vector<IntervalSet> blocks;           // level partition, index 0 = top band
    std::vector<int> vertex_level;             // per tree vertex
};

RecolorResult recolor_tree(const RecolorTask& task);

// Level of an edge is the smaller endpoint level.
int edge_level(const Graph& tree, const std::vector<int>& vertex_level, int e);

// --------------------------------------------------------- split planning

struct TreeAssignment {
    int boundary_edge;  // host edge id (F'-vertex to outside)
    int root;           // host vertex id inside the connector
    int far_end;        // the outside endpoint
    Subgraph tree;      // subtree of the host graph
};

struct SplitPlan {
    EdgeCut cut;                      // F with sides A and B (|B| minimized)
    int d = 0, d0 = 0, subdivisions = 0;
    Subgraph gx;                      // B together with the cut edges
    Subgraph connector;               // d0-closed closure of the cut inside gx
    Subgraph connector_neighborhood;  // N(connector) inside gx
    std::vector<int> boundary;        // edges from connector vertices into B
    std::vector<TreeAssignment> trees;
    Subgraph ga_sub;                  // A together with N(connector), in host ids
    ExtractedGraph ga;                // materialized recursion instance for the A side
    ContractedGraph gb;               // A contracted + cut edges subdivided
    std::vector<std::string> issues;  // structural hypotheses that fail at this scale
};

enum class SplitStatus { plan, cyclically_connected, no_cut };

struct SplitOutcome {
    SplitStatus status;
    std::optional<SplitPlan> plan;
};

// Picks the cyclic edge-cut of size < delta whose B side is smallest
// (ties by lexicographic vertex order), builds the connector, the boundary
// trees of depth d, the A-side recursion instance and the contracted B-side
// instance. subdivisions defaults to floor(((2d+3)*delta + 1)/2), the
// smallest girth bound the split argument asks for.
SplitOutcome plan_split(const Graph& g, int delta, int d,
                        std::optional<int> subdivisions = std::nullopt,
                        int cut_vertex_budget = 26);

// --------------------------------------------------------------- gluing

// Merges a coloring of the A side (ambient delta+1+eps) with a coloring of
// the contracted B side (ambient delta+1+eps_prime) by recoloring each
// boundary tree. Throws with the violating element when any recolor task or
// the final verification fails.
IntervalColoring glue_colorings(const Graph& g, const SplitPlan& plan,
                                const IntervalColoring& color_a,
                                const IntervalColoring& color_b, int delta,
                                const Rat& eps, const Rat& eps_prime);

// ----------------------------------------------------------- orchestrator

struct ConstructOptions {
    std::optional<Rat> eps_prime;   // default eps/2
    int lp_enum_budget = 40;        // elements for full enumeration
    int lp_colgen_budget = 240;     // elements for column generation
    int cut_vertex_budget = 26;
    long decomposition_budget = 10000000;
    int max_depth = 12;
    enum class Branch { automatic, lp_only, pipeline_only } branch = Branch::automatic;
};

struct ConstructResult {
    bool success = false;
    std::optional<IntervalColoring> coloring;  // verified, ambient delta+1+eps
    std::string reason;                        // on failure
    nlohmann::json trace;
};

// Orchestrates the whole construction: direct LP solve within budget,
// decomposition + factor colorings + composition on cyclically
// delta-connected graphs, and split/recurse/glue otherwise. Never returns an
// unverified coloring; failures carry the deepest verified artifacts in the
// trace.
ConstructResult construct_coloring(const Graph& g, const Rat& eps,
                                   const ConstructOptions& opts = {});

}  // namespace ftc

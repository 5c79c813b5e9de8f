#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/rational.hpp"

namespace ftc {

// Element of the total graph: a vertex or an edge of the host graph.
// Elements are indexed densely: vertices first (0..n-1), then edges
// (n..n+m-1). A TotalIndependentSet is a sorted vector of such indices.
using ElemId = int;
using TotalIndependentSet = std::vector<ElemId>;

struct TotalElement {
    bool is_edge;
    int id;
};

inline int total_element_count(const Graph& g) { return g.vertex_count() + g.edge_count(); }
inline bool elem_is_edge(const Graph& g, ElemId x) { return x >= g.vertex_count(); }
inline int elem_id(const Graph& g, ElemId x) {
    return elem_is_edge(g, x) ? x - g.vertex_count() : x;
}
inline ElemId vertex_elem(const Graph&, int v) { return v; }
inline ElemId edge_elem(const Graph& g, int e) { return g.vertex_count() + e; }
inline TotalElement elem_to_total(const Graph& g, ElemId x) {
    return {elem_is_edge(g, x), elem_id(g, x)};
}

// "v:<label>" for vertices, "e:<label>-<label>" for edges.
std::string elem_str(const Graph& g, ElemId x);
ElemId elem_parse(const Graph& g, const std::string& s);

// Adjacency of the total graph, kept as bitset rows over element indices.
// Two elements are adjacent iff they are adjacent or incident in the host:
// vertex-vertex joined by an edge, edges sharing an endpoint, or a vertex
// with an incident edge.
class TotalAdjacency {
public:
    explicit TotalAdjacency(const Graph& g);

    int count() const { return n_; }
    bool adjacent(ElemId a, ElemId b) const {
        return (row(a)[static_cast<size_t>(b) >> 6] >> (b & 63)) & 1u;
    }
    const uint64_t* row(ElemId x) const { return bits_.data() + static_cast<size_t>(x) * words_; }
    int words() const { return static_cast<int>(words_); }

private:
    int n_;
    size_t words_;
    std::vector<uint64_t> bits_;
    void set(ElemId a, ElemId b);
};

// The total graph as an ordinary Graph whose vertex labels are the element
// strings of the host.
Graph total_graph(const Graph& g);

// Membership test against the adjacency clauses without materializing the
// total graph.
bool is_total_independent(const Graph& g, const std::vector<TotalElement>& elems);
bool is_total_independent(const Graph& g, const TotalIndependentSet& set);

// Every maximal total independent set exactly once, sorted lexicographically
// by element ids (deterministic). Refuses hosts with more than budget
// elements; callers then use the pricing oracle instead.
std::vector<TotalIndependentSet> enumerate_maximal_tis(const Graph& g, int budget = 40);

// Exact maximum-weight total independent set via branch and bound with a
// greedy remaining-weight bound. Weights must be nonnegative. Returns a
// maximal set (padding with zero-weight elements never hurts).
struct MaxWeightResult {
    TotalIndependentSet set;
    Rat weight;
};
MaxWeightResult max_weight_tis(const Graph& g, const std::vector<Rat>& weight);

}  // namespace ftc

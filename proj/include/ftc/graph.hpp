#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ftc {

// Simple undirected graph. Vertices and edges carry dense integer ids
// assigned at construction; original input labels are kept in a symbol
// table so every output can refer to them. Immutable once built.
class Graph {
public:
    struct Edge {
        int u, v;  // endpoint ids, u < v
    };

    Graph() = default;
    explicit Graph(std::vector<std::string> labels);

    // Adds one edge; rejects loops, parallel edges, unknown endpoints.
    int add_edge(int u, int v);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // (neighbor, edge id) pairs in insertion order.
    const std::vector<std::pair<int, int>>& incident(int v) const {
        return adj_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    std::optional<int> find_edge(int u, int v) const;

    bool connected() const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::unordered_map<long long, int> edge_index_;
    long long key(int u, int v) const;
};

// Subset of a host graph's vertices and edges; every edge endpoint must be
// in the vertex subset.
class Subgraph {
public:
    Subgraph() = default;
    explicit Subgraph(const Graph& host);
    static Subgraph from_edges(const Graph& host, const std::vector<int>& edge_ids);
    static Subgraph from_vertices_induced(const Graph& host, const std::vector<int>& vertex_ids);

    const Graph& host() const { return *host_; }
    bool has_vertex(int v) const { return vmask_[static_cast<size_t>(v)] != 0; }
    bool has_edge(int e) const { return emask_[static_cast<size_t>(e)] != 0; }
    void add_vertex(int v);
    void add_edge(int e);  // inserts endpoints as needed

    std::vector<int> vertex_ids() const;
    std::vector<int> edge_ids() const;
    int vertex_count() const { return vcount_; }
    int edge_count() const { return ecount_; }
    bool empty() const { return vcount_ == 0 && ecount_ == 0; }

    bool operator==(const Subgraph& o) const {
        return vmask_ == o.vmask_ && emask_ == o.emask_;
    }

private:
    const Graph* host_ = nullptr;
    std::vector<char> vmask_, emask_;
    int vcount_ = 0, ecount_ = 0;
};

// Minimal edge cut F together with the two components of G - F.
struct EdgeCut {
    std::vector<int> cut_edges;
    std::vector<int> side_a, side_b;  // vertex ids, each sorted
};

// A graph extracted from a vertex/edge subset of another graph, with maps
// back to the original identifiers.
struct ExtractedGraph {
    Graph graph;
    std::vector<int> vertex_to_orig;  // new vertex id -> host vertex id
    std::vector<int> edge_to_orig;    // new edge id -> host edge id
    std::vector<int> vertex_from_orig, edge_from_orig;  // host id -> new id or -1
};
ExtractedGraph extract(const Subgraph& s);

// Result of contracting a vertex set to a single vertex and subdividing
// every former cut edge.
struct ContractedGraph {
    Graph graph;
    int hub;                          // the contraction vertex w
    std::vector<int> vertex_to_new;   // host vertex id -> new id (-1 for contracted side)
    std::vector<int> edge_to_new;     // host edge id -> new id (-1 if vanished/subdivided)
    std::vector<std::vector<int>> cut_paths;  // per cut edge: new edge ids hub..outside
};

// ---------------------------------------------------------------- operations

int max_degree(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Minimum size of a cyclic edge-cut (both components of G - F contain a
// cycle) with a witness, or nullopt when no cyclic edge-cut exists.
// Exhaustive over all two-sided partitions; requires a connected input and
// refuses graphs beyond the vertex budget.
struct CyclicCutResult {
    std::optional<int> size;      // nullopt = no cyclic edge-cut at all
    std::optional<EdgeCut> witness;
};
CyclicCutResult cyclic_edge_connectivity(const Graph& g, int vertex_budget = 26);

bool is_cyclically_k_connected(const Graph& g, int k, int vertex_budget = 26);

// All minimal cyclic edge-cuts of size < max_cut_size, as (cut, A, B) with
// both sides connected and containing a cycle. Used by the split planner.
std::vector<EdgeCut> cyclic_cuts_below(const Graph& g, int max_cut_size,
                                       int vertex_budget = 26);

// Smallest d-closed subgraph of the host containing h: repeatedly adjoins
// every path of length <= d whose endpoints lie in h but whose interior
// avoids it, until none remains.
Subgraph d_connector(const Graph& g, const Subgraph& h, int d);

// True when no h-path of length <= d exists (endpoints in h, interior and
// edges outside h).
bool is_d_closed(const Graph& g, const Subgraph& h, int d);

// Subgraph spanned by all host edges with at least one endpoint in h.
Subgraph neighborhood(const Graph& g, const Subgraph& h);

bool is_forest(const Subgraph& h);

// Contracts the vertex set a into a new vertex and replaces every former
// edge between a and the rest by a path with t internal vertices. With
// t = 0 parallel edges collapse (the result stays simple).
ContractedGraph contract_and_subdivide(const Graph& g, const std::vector<int>& a, int t);

// BFS distances from src, optionally restricted to an allowed-vertex mask.
std::vector<int> bfs_distances(const Graph& g, int src,
                               const std::vector<char>* allowed = nullptr);

}  // namespace ftc

#include "ftc/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "ftc/rational.hpp"

namespace ftc {

// ---------------------------------------------------------------------- Graph

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    adj_.resize(labels_.size());
}

long long Graph::key(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * vertex_count() + v;
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (edge_index_.count(key(u, v))) throw std::invalid_argument("parallel edge");
    if (u > v) std::swap(u, v);
    int id = edge_count();
    edges_.push_back({u, v});
    adj_[static_cast<size_t>(u)].push_back({v, id});
    adj_[static_cast<size_t>(v)].push_back({u, id});
    edge_index_[key(u, v)] = id;
    return id;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = std::to_string(i);
    Graph g(std::move(labels));
    for (auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::optional<int> Graph::find_edge(int u, int v) const {
    auto it = edge_index_.find(key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<int> dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> bfs_distances(const Graph& g, int src, const std::vector<char>* allowed) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    if (allowed && !(*allowed)[static_cast<size_t>(src)]) return dist;
    std::deque<int> q{src};
    dist[static_cast<size_t>(src)] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (auto [y, e] : g.incident(x)) {
            (void)e;
            if (allowed && !(*allowed)[static_cast<size_t>(y)]) continue;
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                q.push_back(y);
            }
        }
    }
    return dist;
}

// ------------------------------------------------------------------- Subgraph

Subgraph::Subgraph(const Graph& host)
    : host_(&host),
      vmask_(static_cast<size_t>(host.vertex_count()), 0),
      emask_(static_cast<size_t>(host.edge_count()), 0) {}

void Subgraph::add_vertex(int v) {
    if (!vmask_[static_cast<size_t>(v)]) {
        vmask_[static_cast<size_t>(v)] = 1;
        ++vcount_;
    }
}

void Subgraph::add_edge(int e) {
    if (!emask_[static_cast<size_t>(e)]) {
        emask_[static_cast<size_t>(e)] = 1;
        ++ecount_;
        add_vertex(host_->edge(e).u);
        add_vertex(host_->edge(e).v);
    }
}

Subgraph Subgraph::from_edges(const Graph& host, const std::vector<int>& edge_ids) {
    Subgraph s(host);
    for (int e : edge_ids) s.add_edge(e);
    return s;
}

Subgraph Subgraph::from_vertices_induced(const Graph& host, const std::vector<int>& vertex_ids) {
    Subgraph s(host);
    for (int v : vertex_ids) s.add_vertex(v);
    for (int e = 0; e < host.edge_count(); ++e)
        if (s.has_vertex(host.edge(e).u) && s.has_vertex(host.edge(e).v)) s.add_edge(e);
    return s;
}

std::vector<int> Subgraph::vertex_ids() const {
    std::vector<int> out;
    for (size_t v = 0; v < vmask_.size(); ++v)
        if (vmask_[v]) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<int> Subgraph::edge_ids() const {
    std::vector<int> out;
    for (size_t e = 0; e < emask_.size(); ++e)
        if (emask_[e]) out.push_back(static_cast<int>(e));
    return out;
}

ExtractedGraph extract(const Subgraph& s) {
    const Graph& host = s.host();
    ExtractedGraph out;
    out.vertex_from_orig.assign(static_cast<size_t>(host.vertex_count()), -1);
    out.edge_from_orig.assign(static_cast<size_t>(host.edge_count()), -1);
    std::vector<std::string> labels;
    for (int v : s.vertex_ids()) {
        out.vertex_from_orig[static_cast<size_t>(v)] = static_cast<int>(labels.size());
        out.vertex_to_orig.push_back(v);
        labels.push_back(host.label(v));
    }
    out.graph = Graph(std::move(labels));
    for (int e : s.edge_ids()) {
        int u = out.vertex_from_orig[static_cast<size_t>(host.edge(e).u)];
        int v = out.vertex_from_orig[static_cast<size_t>(host.edge(e).v)];
        int ne = out.graph.add_edge(u, v);
        out.edge_from_orig[static_cast<size_t>(e)] = ne;
        out.edge_to_orig.push_back(e);
    }
    return out;
}

// --------------------------------------------------------------- basic stats

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::optional<int> girth(const Graph& g) {
    // Per-vertex BFS: for every non-tree edge xy the value dist[x]+dist[y]+1
    // bounds a cycle through the root from below by the girth, and equality
    // is attained for roots on a shortest cycle.
    int best = -1;
    int n = g.vertex_count();
    for (int r = 0; r < n; ++r) {
        std::vector<int> dist(static_cast<size_t>(n), -1), pedge(static_cast<size_t>(n), -1);
        std::deque<int> q{r};
        dist[static_cast<size_t>(r)] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto [y, e] : g.incident(x)) {
                if (dist[static_cast<size_t>(y)] < 0) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    pedge[static_cast<size_t>(y)] = e;
                    q.push_back(y);
                }
            }
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            int x = g.edge(e).u, y = g.edge(e).v;
            if (dist[static_cast<size_t>(x)] < 0 || dist[static_cast<size_t>(y)] < 0) continue;
            if (pedge[static_cast<size_t>(x)] == e || pedge[static_cast<size_t>(y)] == e) continue;
            int len = dist[static_cast<size_t>(x)] + dist[static_cast<size_t>(y)] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// ------------------------------------------------------- cyclic edge cuts

namespace {

bool mask_connected(const std::vector<unsigned>& adjm, unsigned mask) {
    if (!mask) return false;
    unsigned reach = mask & (~mask + 1u);  // lowest set bit
    unsigned frontier = reach;
    while (frontier) {
        unsigned nxt = 0;
        unsigned f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            nxt |= adjm[static_cast<size_t>(v)];
        }
        nxt &= mask & ~reach;
        reach |= nxt;
        frontier = nxt;
    }
    return reach == mask;
}

EdgeCut cut_from_mask(const Graph& g, unsigned amask) {
    EdgeCut cut;
    for (int e = 0; e < g.edge_count(); ++e) {
        bool au = (amask >> g.edge(e).u) & 1u, av = (amask >> g.edge(e).v) & 1u;
        if (au != av) cut.cut_edges.push_back(e);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        ((amask >> v) & 1u ? cut.side_a : cut.side_b).push_back(v);
    return cut;
}

// Scans every two-sided vertex partition (A, B) with vertex 0 in A and
// reports those whose cut has size < bound(), both sides connected and both
// sides containing a cycle. A minimum cyclic edge-cut always has this shape,
// so the scan is exhaustive for minimal cyclic cuts.
template <typename Bound, typename Sink>
void scan_cyclic_partitions(const Graph& g, int vertex_budget, Bound bound, Sink sink) {
    if (!g.connected()) throw std::invalid_argument("cyclic cuts need a connected graph");
    int n = g.vertex_count();
    if (n > vertex_budget)
        throw BudgetExceeded("cyclic edge-cut enumeration limited to " +
                             std::to_string(vertex_budget) + " vertices");
    if (n < 2 || n > 31) return;
    std::vector<unsigned> adjm(static_cast<size_t>(n), 0);
    for (auto& e : g.edges()) {
        adjm[static_cast<size_t>(e.u)] |= 1u << e.v;
        adjm[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    unsigned full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
    for (unsigned amask = 1; amask < full; amask += 2) {
        int limit = bound();
        if (limit <= 0) return;
        unsigned bmask = full & ~amask;
        int cut_size = 0, edges_a = 0, edges_b = 0;
        bool over = false;
        for (auto& e : g.edges()) {
            bool au = (amask >> e.u) & 1u, av = (amask >> e.v) & 1u;
            if (au && av) ++edges_a;
            else if (!au && !av) ++edges_b;
            else if (++cut_size >= limit) { over = true; break; }
        }
        if (over) continue;
        // Connected side has a cycle iff it has at least as many edges as
        // vertices.
        if (edges_a < std::popcount(amask) || edges_b < std::popcount(bmask)) continue;
        if (!mask_connected(adjm, amask) || !mask_connected(adjm, bmask)) continue;
        sink(amask, cut_size);
    }
}

}  // namespace

std::vector<EdgeCut> cyclic_cuts_below(const Graph& g, int max_cut_size, int vertex_budget) {
    std::vector<EdgeCut> out;
    scan_cyclic_partitions(
        g, vertex_budget, [&] { return max_cut_size; },
        [&](unsigned amask, int) { out.push_back(cut_from_mask(g, amask)); });
    return out;
}

CyclicCutResult cyclic_edge_connectivity(const Graph& g, int vertex_budget) {
    CyclicCutResult res;
    unsigned best_mask = 0;
    scan_cyclic_partitions(
        g, vertex_budget,
        [&] { return res.size ? *res.size : g.edge_count() + 1; },
        [&](unsigned amask, int cut_size) {
            res.size = cut_size;
            best_mask = amask;
        });
    if (res.size) res.witness = cut_from_mask(g, best_mask);
    return res;
}

bool is_cyclically_k_connected(const Graph& g, int k, int vertex_budget) {
    if (g.edge_count() <= k) return false;
    return cyclic_cuts_below(g, k, vertex_budget).empty();
}

// ------------------------------------------------------------- d-connectors

namespace {

// Shortest path (as edge ids) of length <= d between two distinct vertices
// of h whose interior vertices and all edges avoid h. Returns empty when
// none exists.
std::vector<int> find_h_path(const Graph& g, const Subgraph& h, int d) {
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!h.has_vertex(s)) continue;
        // BFS from s that never expands through h-vertices and never uses
        // h-edges; reaching another h-vertex closes an h-path.
        std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
        std::vector<int> pvert(static_cast<size_t>(g.vertex_count()), -1);
        std::vector<int> pedge(static_cast<size_t>(g.vertex_count()), -1);
        std::deque<int> q{s};
        dist[static_cast<size_t>(s)] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (dist[static_cast<size_t>(x)] >= d) continue;
            for (auto [y, e] : g.incident(x)) {
                if (h.has_edge(e)) continue;
                if (dist[static_cast<size_t>(y)] >= 0) continue;
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                pvert[static_cast<size_t>(y)] = x;
                pedge[static_cast<size_t>(y)] = e;
                if (h.has_vertex(y)) {
                    if (y == s) continue;
                    std::vector<int> path;
                    for (int cur = y; cur != s; cur = pvert[static_cast<size_t>(cur)])
                        path.push_back(pedge[static_cast<size_t>(cur)]);
                    return path;
                }
                q.push_back(y);  // only non-h vertices keep expanding
            }
        }
    }
    return {};
}

}  // namespace

bool is_d_closed(const Graph& g, const Subgraph& h, int d) {
    return find_h_path(g, h, d).empty();
}

Subgraph d_connector(const Graph& g, const Subgraph& h, int d) {
    if (h.empty()) throw std::invalid_argument("d_connector: empty subgraph");
    if (d < 1) throw std::invalid_argument("d_connector: d must be >= 1");
    Subgraph cur = h;
    for (;;) {
        std::vector<int> path = find_h_path(g, cur, d);
        if (path.empty()) return cur;
        for (int e : path) cur.add_edge(e);
    }
}

Subgraph neighborhood(const Graph& g, const Subgraph& h) {
    Subgraph out(g);
    for (int e = 0; e < g.edge_count(); ++e)
        if (h.has_vertex(g.edge(e).u) || h.has_vertex(g.edge(e).v)) out.add_edge(e);
    return out;
}

bool is_forest(const Subgraph& h) {
    const Graph& g = h.host();
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int e : h.edge_ids()) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
    }
    return true;
}

// -------------------------------------------------- contract and subdivide

ContractedGraph contract_and_subdivide(const Graph& g, const std::vector<int>& a, int t) {
    if (t < 0) throw std::invalid_argument("subdivision count must be >= 0");
    std::vector<char> in_a(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : a) in_a[static_cast<size_t>(v)] = 1;
    if (a.empty() || static_cast<int>(a.size()) == g.vertex_count())
        throw std::invalid_argument("contraction side must be a proper nonempty subset");
    {
        Subgraph sa = Subgraph::from_vertices_induced(g, a);
        ExtractedGraph ea = extract(sa);
        if (!ea.graph.connected())
            throw std::invalid_argument("contraction side must induce a connected subgraph");
    }

    ContractedGraph out;
    out.vertex_to_new.assign(static_cast<size_t>(g.vertex_count()), -1);
    out.edge_to_new.assign(static_cast<size_t>(g.edge_count()), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_a[static_cast<size_t>(v)]) continue;
        out.vertex_to_new[static_cast<size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    int hub = static_cast<int>(labels.size());
    labels.push_back("w");

    std::vector<int> cut_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        bool au = in_a[static_cast<size_t>(g.edge(e).u)], av = in_a[static_cast<size_t>(g.edge(e).v)];
        if (au != av) cut_edges.push_back(e);
    }
    for (size_t i = 0; i < cut_edges.size(); ++i)
        for (int j = 0; j < t; ++j)
            labels.push_back("w." + std::to_string(i) + "." + std::to_string(j));

    Graph ng(std::move(labels));
    // Edges fully outside the contracted side survive unchanged.
    for (int e = 0; e < g.edge_count(); ++e) {
        bool au = in_a[static_cast<size_t>(g.edge(e).u)], av = in_a[static_cast<size_t>(g.edge(e).v)];
        if (au || av) continue;
        out.edge_to_new[static_cast<size_t>(e)] =
            ng.add_edge(out.vertex_to_new[static_cast<size_t>(g.edge(e).u)],
                        out.vertex_to_new[static_cast<size_t>(g.edge(e).v)]);
    }
    int next_internal = hub + 1;
    for (size_t i = 0; i < cut_edges.size(); ++i) {
        int e = cut_edges[i];
        int outside = in_a[static_cast<size_t>(g.edge(e).u)] ? g.edge(e).v : g.edge(e).u;
        int far = out.vertex_to_new[static_cast<size_t>(outside)];
        std::vector<int> path;
        int prev = hub;
        for (int j = 0; j < t; ++j) {
            int mid = next_internal++;
            path.push_back(ng.add_edge(prev, mid));
            prev = mid;
        }
        if (auto existing = ng.find_edge(prev, far)) {
            path.push_back(*existing);  // t = 0 with a shared endpoint: stay simple
        } else {
            path.push_back(ng.add_edge(prev, far));
        }
        out.cut_paths.push_back(std::move(path));
    }
    out.graph = std::move(ng);
    out.hub = hub;
    return out;
}

}  // namespace ftc

#include "ftc/fixtures.hpp"

#include <stdexcept>

namespace ftc {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, e);
}

Graph lcf_graph(const std::vector<int>& pattern, int repeats) {
    int n = static_cast<int>(pattern.size()) * repeats;
    Graph g = Graph::from_edges(n, {});
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        int j = ((i + pattern[static_cast<size_t>(i) % pattern.size()]) % n + n) % n;
        if (!g.find_edge(i, j)) g.add_edge(i, j);
    }
    return g;
}

Graph subdivide(const Graph& g, int times) {
    if (times < 0) throw std::invalid_argument("subdivision count must be >= 0");
    std::vector<std::string> labels = g.labels();
    for (int e = 0; e < g.edge_count(); ++e)
        for (int j = 0; j < times; ++j)
            labels.push_back("s" + std::to_string(e) + "." + std::to_string(j));
    Graph out(std::move(labels));
    int next = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        int prev = g.edge(e).u;
        for (int j = 0; j < times; ++j) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, g.edge(e).v);
    }
    return out;
}

namespace {

std::optional<std::optional<int>> certified_cyc(std::optional<int> v) {
    return std::optional<std::optional<int>>(v);
}

std::vector<Fixture> make_fixtures() {
    std::vector<Fixture> out;
    auto add = [&](std::string name, Graph g, std::optional<int> girth, int maxdeg,
                   std::optional<std::optional<int>> cyc, std::optional<Rat> chi) {
        out.push_back({std::move(name), std::move(g), girth, maxdeg, cyc, std::move(chi)});
    };
    // Cyclic connectivity values below were frozen from the exhaustive
    // partition scan and cross-checked against the subset-enumeration oracle
    // in the test suite.
    add("K2", path_graph(2), std::nullopt, 1, certified_cyc(std::nullopt), Rat(3));
    add("P3", path_graph(3), std::nullopt, 2, certified_cyc(std::nullopt), Rat(3));
    add("C4", cycle_graph(4), 4, 2, certified_cyc(std::nullopt), Rat(4));
    add("C5", cycle_graph(5), 5, 2, certified_cyc(std::nullopt), Rat(10) / 3);
    add("C6", cycle_graph(6), 6, 2, certified_cyc(std::nullopt), Rat(3));
    add("C7", cycle_graph(7), 7, 2, certified_cyc(std::nullopt), Rat(7) / 2);
    add("K4", complete_graph(4), 3, 3, certified_cyc(std::nullopt), Rat(5));
    add("K6", complete_graph(6), 3, 5, certified_cyc(9), Rat(7));
    add("K2,2", complete_bipartite(2, 2), 4, 2, certified_cyc(std::nullopt), Rat(4));
    add("K3,3", complete_bipartite(3, 3), 4, 3, certified_cyc(std::nullopt), Rat(5));
    add("Petersen", petersen_graph(), 5, 3, certified_cyc(5), std::nullopt);
    add("Heawood", lcf_graph({5, -5}, 7), 6, 3, certified_cyc(6), std::nullopt);
    add("McGee", lcf_graph({12, 7, -7}, 8), 7, 3, certified_cyc(7), std::nullopt);
    add("Pappus", lcf_graph({5, 7, -7, 7, -7, -5}, 3), 6, 3, certified_cyc(6), std::nullopt);
    add("Dodecahedron", lcf_graph({10, 7, 4, -4, -7, 10, -4, 7, -7, 4}, 2), 5, 3,
        certified_cyc(5), std::nullopt);
    return out;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
    static const std::vector<Fixture> fixtures = make_fixtures();
    return fixtures;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : bundled_fixtures())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace ftc

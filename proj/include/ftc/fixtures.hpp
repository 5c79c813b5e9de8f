#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/rational.hpp"

namespace ftc {

// Bundled test graph with its certified attributes. Every attribute is
// re-derivable by the toolkit; the fixture suite fails on any mismatch.
struct Fixture {
    std::string name;
    Graph graph;
    std::optional<int> girth;                  // nullopt: acyclic
    int max_degree = 0;
    std::optional<std::optional<int>> cyclic_connectivity;
    //   outer nullopt: not certified; inner nullopt: no cyclic edge-cut
    std::optional<Rat> chi;                    // certified fractional total
                                               // chromatic number
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

// Hamiltonian cycle on repeats*pattern.size() vertices plus the chord
// j -> j + pattern[j mod |pattern|]; duplicate chords collapse.
Graph lcf_graph(const std::vector<int>& pattern, int repeats);

// Every edge replaced by a path with `times` internal vertices.
Graph subdivide(const Graph& g, int times);

const std::vector<Fixture>& bundled_fixtures();
const Fixture& fixture(const std::string& name);

}  // namespace ftc

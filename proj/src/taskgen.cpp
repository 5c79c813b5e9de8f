#include "ftc/taskgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftc {

Graph random_tree(TaskRng& rng, int delta, int depth, int max_vertices) {
    if (depth < 1 || delta < 2) throw std::invalid_argument("need depth >= 1, delta >= 2");
    // Spine: the root (a leaf) down to a vertex at the exact depth.
    std::vector<std::pair<int, int>> edges;
    std::vector<int> level{0};  // distance from root per vertex
    for (int i = 1; i <= depth; ++i) {
        edges.emplace_back(i - 1, i);
        level.push_back(i);
    }
    int n = depth + 1;
    // Random branches: pick a vertex below the root, hang a child, never
    // exceeding the depth or the degree cap.
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (auto& [u, v] : edges) { ++degree[static_cast<size_t>(u)]; ++degree[static_cast<size_t>(v)]; }
    int attempts = max_vertices * 2;
    while (n < max_vertices && attempts-- > 0) {
        int host = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
        if (level[static_cast<size_t>(host)] >= depth) continue;
        if (degree[static_cast<size_t>(host)] >= delta) continue;
        edges.emplace_back(host, n);
        level.push_back(level[static_cast<size_t>(host)] + 1);
        degree.push_back(1);
        ++degree[static_cast<size_t>(host)];
        ++n;
    }
    return Graph::from_edges(n, edges);
}

IntervalColoring greedy_tree_total_coloring(const Graph& tree, int delta, const Rat& ambient) {
    if (max_degree(tree) > delta) throw std::invalid_argument("tree degree exceeds delta");
    if (ambient < delta + 1) throw std::invalid_argument("ambient too small for delta+1 colors");
    int n = tree.vertex_count();
    std::vector<int> vcolor(static_cast<size_t>(n), -1);
    std::vector<int> ecolor(static_cast<size_t>(tree.edge_count()), -1);
    // Root at 0; color top-down. A vertex conflicts with its parent and its
    // parent edge; an edge conflicts with the colors already present at its
    // endpoints. delta+1 colors always suffice.
    std::vector<int> order = bfs_distances(tree, 0);
    std::vector<int> verts(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) verts[static_cast<size_t>(v)] = v;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return order[static_cast<size_t>(a)] < order[static_cast<size_t>(b)] ||
               (order[static_cast<size_t>(a)] == order[static_cast<size_t>(b)] && a < b);
    });
    auto free_color = [&](auto&& used) {
        for (int c = 0; c <= delta; ++c)
            if (!used(c)) return c;
        throw std::logic_error("ran out of colors");
    };
    for (int v : verts) {
        // Color v (skip root: no constraints yet).
        vcolor[static_cast<size_t>(v)] = free_color([&](int c) {
            for (auto [w, e] : tree.incident(v)) {
                if (vcolor[static_cast<size_t>(w)] == c) return true;
                if (ecolor[static_cast<size_t>(e)] == c) return true;
            }
            return false;
        });
        // Then all still-uncolored incident edges (the ones to children; the
        // parent edge was colored when the parent was processed).
        for (auto [w, e] : tree.incident(v)) {
            (void)w;
            if (ecolor[static_cast<size_t>(e)] >= 0) continue;
            ecolor[static_cast<size_t>(e)] = free_color([&](int c) {
                for (int x : {tree.edge(e).u, tree.edge(e).v}) {
                    if (vcolor[static_cast<size_t>(x)] == c) return true;
                    for (auto [w2, f] : tree.incident(x)) {
                        (void)w2;
                        if (f != e && ecolor[static_cast<size_t>(f)] == c) return true;
                    }
                }
                return false;
            });
        }
    }
    for (int e = 0; e < tree.edge_count(); ++e)
        if (ecolor[static_cast<size_t>(e)] < 0) throw std::logic_error("edge left uncolored");
    IntervalColoring out;
    out.ambient = ambient;
    out.colors.assign(static_cast<size_t>(total_element_count(tree)), IntervalSet());
    for (int v = 0; v < n; ++v)
        out.colors[static_cast<size_t>(vertex_elem(tree, v))] =
            IntervalSet(Rat(vcolor[static_cast<size_t>(v)]), Rat(vcolor[static_cast<size_t>(v)]) + 1);
    for (int e = 0; e < tree.edge_count(); ++e)
        out.colors[static_cast<size_t>(edge_elem(tree, e))] =
            IntervalSet(Rat(ecolor[static_cast<size_t>(e)]), Rat(ecolor[static_cast<size_t>(e)]) + 1);
    return out;
}

IntervalSet random_measure_set(TaskRng& rng, const Rat& ambient, const IntervalSet& avoid,
                               const Rat& target, int pieces, int granularity) {
    IntervalSet room = IntervalSet(Rat(0), ambient).subtract(avoid);
    if (room.measure() < target)
        throw std::invalid_argument("not enough free measure");
    IntervalSet chosen;
    Rat left = target;
    for (int p = 0; p < pieces - 1 && left > 0; ++p) {
        // Random sub-chunk of a random free interval.
        const auto& parts = room.parts();
        const Interval& iv = parts[static_cast<size_t>(rng.below(parts.size()))];
        Rat len = iv.length() * rng.unit(granularity);
        len = rat_min(len, left);
        Rat start_max = iv.length() - len;
        Rat start = iv.lo + start_max * rng.unit(granularity);
        IntervalSet chunk(start, start + len);
        chosen = chosen.unite(chunk);
        room = room.subtract(chunk);
        left = target - chosen.measure();
    }
    if (left > 0) chosen = chosen.unite(room.take_prefix(left));
    return chosen;
}

RecolorTask random_recolor_task(uint64_t seed, int delta, const Rat& eps, const Rat& eps_prime) {
    if (!(eps_prime > 0 && eps_prime < eps))
        throw std::invalid_argument("need 0 < eps_prime < eps");
    TaskRng rng(seed);
    RecolorTask task;
    task.delta = delta;
    task.eps = eps;
    task.eps_prime = eps_prime;
    int d = task.depth();
    task.tree = random_tree(rng, delta, d);
    task.root = 0;
    task.base = greedy_tree_total_coloring(task.tree, delta, task.ambient_low());
    task.root_set = random_measure_set(rng, task.ambient_high(), IntervalSet(), Rat(1));
    task.root_edge_set = random_measure_set(rng, task.ambient_high(), task.root_set, Rat(1));
    return task;
}

}  // namespace ftc

#include "ftc/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftc/rational.hpp"

namespace ftc {

namespace {

// -------------------------------------------------------------- Misra-Gries

class MisraGries {
public:
    explicit MisraGries(const Graph& g)
        : g_(g), ncolors_(max_degree(g) + 1), color_(static_cast<size_t>(g.edge_count()), -1) {}

    std::vector<int> run() {
        for (int e = 0; e < g_.edge_count(); ++e) color_edge(e);
        return color_;
    }

private:
    const Graph& g_;
    int ncolors_;
    std::vector<int> color_;

    bool used_at(int v, int c) const {
        for (auto [w, e] : g_.incident(v)) {
            (void)w;
            if (color_[static_cast<size_t>(e)] == c) return true;
        }
        return false;
    }

    int free_at(int v) const {
        for (int c = 0; c < ncolors_; ++c)
            if (!used_at(v, c)) return c;
        throw std::logic_error("no free color");  // degree <= ncolors-1 rules this out
    }

    std::optional<int> edge_with_color(int v, int c) const {
        for (auto [w, e] : g_.incident(v)) {
            (void)w;
            if (color_[static_cast<size_t>(e)] == c) return e;
        }
        return std::nullopt;
    }

    int other_end(int e, int v) const {
        return g_.edge(e).u == v ? g_.edge(e).v : g_.edge(e).u;
    }

    // Maximal fan of u starting at the uncolored edge towards v: distinct
    // neighbors f_0 = v, f_1, ... with (u, f_{i+1}) colored and its color
    // free at f_i.
    std::vector<int> build_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<char> in_fan(static_cast<size_t>(g_.vertex_count()), 0);
        in_fan[static_cast<size_t>(v)] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto [w, e] : g_.incident(u)) {
                if (in_fan[static_cast<size_t>(w)] || color_[static_cast<size_t>(e)] < 0) continue;
                if (!used_at(fan.back(), color_[static_cast<size_t>(e)])) {
                    fan.push_back(w);
                    in_fan[static_cast<size_t>(w)] = 1;
                    grew = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Maximal path from u alternating colors d, c; swaps the two colors on it.
    void invert_cd_path(int u, int c, int d) {
        int cur = u, want = d;
        std::vector<int> path;
        std::vector<char> seen(static_cast<size_t>(g_.vertex_count()), 0);
        seen[static_cast<size_t>(u)] = 1;
        for (;;) {
            auto e = edge_with_color(cur, want);
            if (!e) break;
            path.push_back(*e);
            cur = other_end(*e, cur);
            if (seen[static_cast<size_t>(cur)]) break;  // cannot happen on a proper coloring
            seen[static_cast<size_t>(cur)] = 1;
            want = (want == c) ? d : c;
        }
        for (int e : path)
            color_[static_cast<size_t>(e)] = (color_[static_cast<size_t>(e)] == c) ? d : c;
    }

    void color_edge(int eid) {
        int u = g_.edge(eid).u, v = g_.edge(eid).v;
        std::vector<int> fan = build_fan(u, v);
        int c = free_at(u);
        int d = free_at(fan.back());
        if (c != d) invert_cd_path(u, c, d);
        // After the inversion d is free at u; find the shortest fan prefix
        // that is still a fan and ends at a vertex with d free, then rotate.
        size_t w = fan.size();
        for (size_t j = 0; j < fan.size(); ++j) {
            if (j > 0) {
                auto e = g_.find_edge(u, fan[j]);
                if (!e || color_[static_cast<size_t>(*e)] < 0 ||
                    used_at(fan[j - 1], color_[static_cast<size_t>(*e)]))
                    break;  // prefix stops being a fan here
            }
            if (!used_at(fan[j], d)) { w = j; break; }
        }
        if (w == fan.size()) throw std::logic_error("fan rotation target not found");
        for (size_t i = 0; i < w; ++i) {
            auto e_next = g_.find_edge(u, fan[i + 1]);
            color_[static_cast<size_t>(*g_.find_edge(u, fan[i]))] = color_[static_cast<size_t>(*e_next)];
        }
        color_[static_cast<size_t>(*g_.find_edge(u, fan[w]))] = d;
    }
};

// Bounded exact search for a proper edge coloring with `target` classes.
// Edges are processed most-constrained-first; colors are tried in index
// order with a fresh-color cap for symmetry breaking.
class ExactEdgeColoring {
public:
    ExactEdgeColoring(const Graph& g, int target, long budget)
        : g_(g), target_(target), budget_(budget),
          color_(static_cast<size_t>(g.edge_count()), -1) {}

    std::optional<std::vector<int>> run() {
        if (dive(0)) return color_;
        return std::nullopt;
    }

private:
    const Graph& g_;
    int target_;
    long budget_;
    std::vector<int> color_;

    bool ok(int e, int c) const {
        for (int v : {g_.edge(e).u, g_.edge(e).v})
            for (auto [w, f] : g_.incident(v)) {
                (void)w;
                if (f != e && color_[static_cast<size_t>(f)] == c) return false;
            }
        return true;
    }

    bool dive(int done) {
        if (budget_-- <= 0) throw BudgetExceeded("edge-coloring search budget exhausted");
        if (done == g_.edge_count()) return true;
        // Most constrained uncolored edge.
        int pick = -1, best_free = target_ + 1;
        for (int e = 0; e < g_.edge_count(); ++e) {
            if (color_[static_cast<size_t>(e)] >= 0) continue;
            int free = 0;
            for (int c = 0; c < target_; ++c)
                if (ok(e, c)) ++free;
            if (free == 0) return false;
            if (free < best_free) { best_free = free; pick = e; }
        }
        int max_used = -1;
        for (int e = 0; e < g_.edge_count(); ++e) max_used = std::max(max_used, color_[static_cast<size_t>(e)]);
        for (int c = 0; c < std::min(target_, max_used + 2); ++c) {
            if (!ok(pick, c)) continue;
            color_[static_cast<size_t>(pick)] = c;
            if (dive(done + 1)) return true;
            color_[static_cast<size_t>(pick)] = -1;
        }
        return false;
    }
};

}  // namespace

std::vector<std::vector<int>> edge_color(const Graph& g, long refine_budget) {
    if (g.edge_count() == 0) return {};
    std::vector<int> color = MisraGries(g).run();
    int used = 1 + *std::max_element(color.begin(), color.end());
    int delta = max_degree(g);
    if (used > delta && refine_budget > 0) {
        try {
            ExactEdgeColoring exact(g, delta, refine_budget);
            if (auto better = exact.run()) {
                color = *better;
                used = delta;
            }
        } catch (const BudgetExceeded&) {
            // keep the Misra-Gries coloring
        }
    }
    std::vector<std::vector<int>> classes(static_cast<size_t>(used));
    for (int e = 0; e < g.edge_count(); ++e)
        classes[static_cast<size_t>(color[static_cast<size_t>(e)])].push_back(e);
    std::erase_if(classes, [](const std::vector<int>& c) { return c.empty(); });
    return classes;
}

// ------------------------------------------------------------ decomposition

namespace {

// Exhaustive assignment of edges to parts with per-vertex degree caps.
// Part 0 is the designated matching when ell is odd. Non-matching parts are
// interchangeable, so an edge may only open the next unused one.
class DecompositionBacktracker {
public:
    DecompositionBacktracker(const Graph& g, int nparts, bool has_matching, long budget)
        : g_(g), nparts_(nparts), has_matching_(has_matching), budget_(budget),
          assign_(static_cast<size_t>(g.edge_count()), -1),
          deg_(static_cast<size_t>(nparts), std::vector<int>(static_cast<size_t>(g.vertex_count()), 0)),
          part_size_(static_cast<size_t>(nparts), 0) {
        // pend_[e][v] = incident edges of v with id >= e.
        pend_.assign(static_cast<size_t>(g.edge_count()) + 1,
                     std::vector<int>(static_cast<size_t>(g.vertex_count()), 0));
        for (int e = g.edge_count() - 1; e >= 0; --e) {
            pend_[static_cast<size_t>(e)] = pend_[static_cast<size_t>(e) + 1];
            ++pend_[static_cast<size_t>(e)][static_cast<size_t>(g.edge(e).u)];
            ++pend_[static_cast<size_t>(e)][static_cast<size_t>(g.edge(e).v)];
        }
    }

    DecompositionSearch run() {
        DecompositionSearch out;
        out.complete = true;
        try {
            if (dive(0)) {
                Decomposition d;
                d.parts.assign(static_cast<size_t>(nparts_), {});
                for (int e = 0; e < g_.edge_count(); ++e)
                    d.parts[static_cast<size_t>(assign_[static_cast<size_t>(e)])].push_back(e);
                if (has_matching_) d.matching_index = 0;
                out.result = std::move(d);
            }
        } catch (const BudgetExceeded&) {
            out.complete = false;
        }
        return out;
    }

private:
    const Graph& g_;
    int nparts_;
    bool has_matching_;
    long budget_;
    std::vector<int> assign_;
    std::vector<std::vector<int>> deg_;
    std::vector<int> part_size_;
    std::vector<std::vector<int>> pend_;

    int cap(int part) const { return (has_matching_ && part == 0) ? 1 : 2; }

    bool dive(int e) {
        if (budget_-- <= 0) throw BudgetExceeded("decomposition search budget exhausted");
        if (e == g_.edge_count()) return true;
        int u = g_.edge(e).u, v = g_.edge(e).v;
        int first_np = has_matching_ ? 1 : 0;
        int max_open = first_np - 1;
        for (int p = first_np; p < nparts_; ++p)
            if (part_size_[static_cast<size_t>(p)] > 0) max_open = p;
        for (int p = 0; p < nparts_; ++p) {
            if (p >= first_np && p > max_open + 1) break;  // symmetry: open parts in order
            if (deg_[static_cast<size_t>(p)][static_cast<size_t>(u)] >= cap(p)) continue;
            if (deg_[static_cast<size_t>(p)][static_cast<size_t>(v)] >= cap(p)) continue;
            assign_[static_cast<size_t>(e)] = p;
            ++deg_[static_cast<size_t>(p)][static_cast<size_t>(u)];
            ++deg_[static_cast<size_t>(p)][static_cast<size_t>(v)];
            ++part_size_[static_cast<size_t>(p)];
            if (feasible_degrees(e + 1, u, v) && dive(e + 1)) return true;
            --deg_[static_cast<size_t>(p)][static_cast<size_t>(u)];
            --deg_[static_cast<size_t>(p)][static_cast<size_t>(v)];
            --part_size_[static_cast<size_t>(p)];
            assign_[static_cast<size_t>(e)] = -1;
        }
        return false;
    }

    // The endpoints of the just-assigned edge must still have room for all
    // their unassigned incident edges. Only they lost capacity, so checking
    // the pair suffices.
    bool feasible_degrees(int next_edge, int u, int v) const {
        for (int x : {u, v}) {
            int room = 0;
            for (int p = 0; p < nparts_; ++p)
                room += cap(p) - deg_[static_cast<size_t>(p)][static_cast<size_t>(x)];
            if (room < pend_[static_cast<size_t>(next_edge)][static_cast<size_t>(x)]) return false;
        }
        return true;
    }
};

}  // namespace

DecompositionSearch ell_decomposition(const Graph& g, int ell, long node_budget) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (max_degree(g) > ell)
        throw std::invalid_argument("ell-decomposition needs max degree <= ell");
    int nparts = (ell + 1) / 2;
    bool odd = (ell % 2) == 1;

    // Fast path: pair proper edge-coloring classes; a union of two matchings
    // has maximum degree 2.
    std::vector<std::vector<int>> classes = edge_color(g);
    if (static_cast<int>(classes.size()) <= ell) {
        Decomposition d;
        d.parts.assign(static_cast<size_t>(nparts), {});
        std::vector<int> order(classes.size());
        for (size_t i = 0; i < classes.size(); ++i) order[i] = static_cast<int>(i);
        size_t next_part = 0;
        if (odd && !classes.empty()) {
            // Designated matching: smallest class, ties by class index.
            int best = 0;
            for (size_t i = 1; i < classes.size(); ++i)
                if (classes[i].size() < classes[static_cast<size_t>(best)].size()) best = static_cast<int>(i);
            d.parts[0] = classes[static_cast<size_t>(best)];
            d.matching_index = 0;
            order.erase(std::find(order.begin(), order.end(), best));
            next_part = 1;
        }
        for (size_t i = 0; i < order.size(); i += 2, ++next_part) {
            if (next_part >= d.parts.size()) break;
            d.parts[next_part] = classes[static_cast<size_t>(order[i])];
            if (i + 1 < order.size()) {
                auto& extra = classes[static_cast<size_t>(order[i + 1])];
                d.parts[next_part].insert(d.parts[next_part].end(), extra.begin(), extra.end());
                std::sort(d.parts[next_part].begin(), d.parts[next_part].end());
            }
        }
        if (verify_decomposition(g, d, ell).empty()) return {d, true};
    }

    DecompositionBacktracker search(g, nparts, odd, node_budget);
    return search.run();
}

std::vector<std::string> verify_decomposition(const Graph& g, const Decomposition& d, int ell) {
    std::vector<std::string> errs;
    int nparts = (ell + 1) / 2;
    if (static_cast<int>(d.parts.size()) != nparts)
        errs.push_back("expected " + std::to_string(nparts) + " parts, got " +
                       std::to_string(d.parts.size()));
    std::vector<int> count(static_cast<size_t>(g.edge_count()), 0);
    for (size_t p = 0; p < d.parts.size(); ++p) {
        std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
        for (int e : d.parts[p]) {
            if (e < 0 || e >= g.edge_count()) {
                errs.push_back("part " + std::to_string(p) + " has an unknown edge id");
                continue;
            }
            ++count[static_cast<size_t>(e)];
            ++deg[static_cast<size_t>(g.edge(e).u)];
            ++deg[static_cast<size_t>(g.edge(e).v)];
        }
        int cap = (d.matching_index && static_cast<int>(p) == *d.matching_index) ? 1 : 2;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg[static_cast<size_t>(v)] > cap)
                errs.push_back("part " + std::to_string(p) + " has degree " +
                               std::to_string(deg[static_cast<size_t>(v)]) + " at vertex " + g.label(v));
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (count[static_cast<size_t>(e)] != 1)
            errs.push_back("edge " + g.label(g.edge(e).u) + "-" + g.label(g.edge(e).v) +
                           " appears " + std::to_string(count[static_cast<size_t>(e)]) + " times");
    if ((ell % 2) == 1 && !d.matching_index)
        errs.push_back("odd ell requires a designated matching part");
    if (d.matching_index && (*d.matching_index < 0 || *d.matching_index >= static_cast<int>(d.parts.size())))
        errs.push_back("matching index out of range");
    return errs;
}

}  // namespace ftc

#include "ftc/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftc/total.hpp"

namespace ftc {

// ----------------------------------------------------- convex combination

Rat composed_coverage_floor(int delta, const Rat& eps) {
    return 1 / (Rat(delta) + 1 + eps);
}

WeightedColoring compose_factor_colorings(const Graph& g, const Decomposition& decomp,
                                          const std::vector<WeightedColoring>& factor_colorings,
                                          const Rat& eps) {
    int delta = max_degree(g);
    if (delta < 5 || delta % 2 == 0)
        throw std::invalid_argument("composition needs odd maximum degree >= 5");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    int k = delta / 2;
    if (!decomp.matching_index)
        throw std::invalid_argument("decomposition must designate a matching");
    if (static_cast<int>(decomp.parts.size()) != k + 1)
        throw std::invalid_argument("expected a delta-decomposition with " +
                                    std::to_string(k + 1) + " parts");
    if (!verify_decomposition(g, decomp, delta).empty())
        throw std::invalid_argument("invalid decomposition");
    if (static_cast<int>(factor_colorings.size()) != k)
        throw std::invalid_argument("need one coloring per non-matching factor");

    Rat eps_prime = eps / 2;
    Rat vertex_floor = 1 / (Rat(delta) + eps_prime);
    Rat edge_floor = Rat(delta - 1) / (2 * (Rat(delta) + eps_prime));

    // Check each factor coloring against its contract before combining.
    std::vector<int> factors;  // part indices other than the matching
    for (int p = 0; p <= k; ++p)
        if (p != *decomp.matching_index) factors.push_back(p);
    for (int i = 0; i < k; ++i) {
        const WeightedColoring& w = factor_colorings[static_cast<size_t>(i)];
        std::vector<Rat> bounds(static_cast<size_t>(total_element_count(g)), Rat(0));
        for (int v = 0; v < g.vertex_count(); ++v)
            bounds[static_cast<size_t>(vertex_elem(g, v))] = vertex_floor;
        for (int e : decomp.parts[static_cast<size_t>(factors[static_cast<size_t>(i)])])
            bounds[static_cast<size_t>(edge_elem(g, e))] = edge_floor;
        std::vector<std::string> errs = verify_weighted_coloring(g, w, bounds, Rat(1));
        if (!errs.empty())
            throw std::invalid_argument("factor coloring " + std::to_string(i) +
                                        " misses its bounds: " + errs.front());
    }

    // The matching is itself a total independent set and carries weight one.
    TotalIndependentSet matching_set;
    for (int e : decomp.parts[static_cast<size_t>(*decomp.matching_index)])
        matching_set.push_back(edge_elem(g, e));
    std::sort(matching_set.begin(), matching_set.end());
    if (!is_total_independent(g, matching_set))
        throw std::invalid_argument("designated part is not a matching");

    Rat factor_coeff = Rat(2 * k + 1) / (Rat(2 * k) * (k + 1));
    Rat matching_coeff = Rat(1) / (2 * k + 2);
    // A vertex of degree delta = 2k+1 forces one matching edge, so the
    // designated part is never empty here.
    if (matching_set.empty())
        throw std::invalid_argument("designated matching is empty");
    WeightedColoring out(g);
    for (auto& w : factor_colorings)
        for (auto& [set, weight] : w.support()) out.add(set, factor_coeff * weight);
    out.add(matching_set, matching_coeff);

    // Exact re-check of the combined coverages: strict for vertices and
    // non-matching edges, >= 1/(2k+2) on the matching.
    if (out.mass() != 1) throw std::logic_error("composition mass is not 1");
    Rat floor = composed_coverage_floor(delta, eps);
    std::vector<Rat> cov = out.coverage_vector();
    std::vector<char> in_matching(static_cast<size_t>(g.edge_count()), 0);
    for (int e : decomp.parts[static_cast<size_t>(*decomp.matching_index)])
        in_matching[static_cast<size_t>(e)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Rat& c = cov[static_cast<size_t>(vertex_elem(g, v))];
        if (!(c > floor))
            throw std::logic_error("vertex " + g.label(v) + " coverage " + rat_str(c) +
                                   " not above " + rat_str(floor) + " (slack " +
                                   rat_str(c - floor) + ")");
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Rat& c = cov[static_cast<size_t>(edge_elem(g, e))];
        if (in_matching[static_cast<size_t>(e)]) {
            if (c < matching_coeff)
                throw std::logic_error("matching edge coverage " + rat_str(c) + " below " +
                                       rat_str(matching_coeff));
        } else if (!(c > floor)) {
            throw std::logic_error("edge coverage " + rat_str(c) + " not above " + rat_str(floor) +
                                   " (slack " + rat_str(c - floor) + ")");
        }
    }
    return out;
}

// -------------------------------------------------------- tree recoloring

long RecolorTask::block_count() const {
    return rat_ceil(ambient_low() / band_width());
}

int edge_level(const Graph& tree, const std::vector<int>& vertex_level, int e) {
    return std::min(vertex_level[static_cast<size_t>(tree.edge(e).u)],
                    vertex_level[static_cast<size_t>(tree.edge(e).v)]);
}

namespace {

void validate_task(const RecolorTask& t) {
    const Graph& tree = t.tree;
    if (tree.vertex_count() < 2 || tree.edge_count() != tree.vertex_count() - 1 ||
        !tree.connected())
        throw std::invalid_argument("recolor input must be a tree with at least one edge");
    if (t.root < 0 || t.root >= tree.vertex_count() || tree.degree(t.root) != 1)
        throw std::invalid_argument("root must be a leaf");
    if (max_degree(tree) > t.delta)
        throw std::invalid_argument("tree degree exceeds delta");
    if (!(t.eps_prime > 0 && t.eps_prime < t.eps))
        throw std::invalid_argument("need 0 < eps_prime < eps");
    if (t.base.ambient != t.ambient_low())
        throw std::invalid_argument("base ambient must be delta+1+eps_prime");
    IntervalSet high_band(Rat(0), t.ambient_high());
    if (t.root_set.measure() != 1 || t.root_edge_set.measure() != 1)
        throw std::invalid_argument("target sets must have measure exactly 1");
    if (!t.root_set.disjoint_from(t.root_edge_set))
        throw std::invalid_argument("target sets must be disjoint");
    if (!high_band.contains(t.root_set) || !high_band.contains(t.root_edge_set))
        throw std::invalid_argument("target sets must live in [0, delta+1+eps)");
    VerifyReport rep = verify_interval_coloring(tree, t.base);
    if (!rep.ok())
        throw std::invalid_argument("base coloring invalid: " + rep.violations.front().detail);
}

}  // namespace

RecolorResult recolor_tree(const RecolorTask& task) {
    validate_task(task);
    const Graph& tree = task.tree;
    Rat low = task.ambient_low(), high = task.ambient_high();
    long s = task.block_count();
    int d = task.depth();

    std::vector<int> dist = bfs_distances(tree, task.root);
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (dist[static_cast<size_t>(v)] > d)
            throw std::invalid_argument("tree depth " + std::to_string(dist[static_cast<size_t>(v)]) +
                                        " exceeds " + std::to_string(d));
    std::vector<int> level(static_cast<size_t>(tree.vertex_count()));
    for (int v = 0; v < tree.vertex_count(); ++v)
        level[static_cast<size_t>(v)] = d - dist[static_cast<size_t>(v)];

    int root_edge = tree.incident(task.root)[0].second;

    // Base colors at the root and the root edge, trimmed to measure exactly
    // one so that an isometry can carry them onto the unit-measure targets.
    IntervalColoring base = task.base;
    ElemId root_el = vertex_elem(tree, task.root);
    ElemId redge_el = edge_elem(tree, root_edge);
    base.colors[static_cast<size_t>(root_el)] = base.color(root_el).take_prefix(Rat(1));
    base.colors[static_cast<size_t>(redge_el)] = base.color(redge_el).take_prefix(Rat(1));

    // Anchor isometry: base root set -> X, base root-edge set -> Y, the rest
    // zipped onto the rest.
    const IntervalSet& src_r = base.color(root_el);
    const IntervalSet& src_e = base.color(redge_el);
    IntervalSet band(Rat(0), high);
    IntervalSet src_rest = band.subtract(src_r.unite(src_e));
    IntervalSet dst_rest = band.subtract(task.root_set.unite(task.root_edge_set));
    PartialIsometry anchor_map = matching_isometry(src_r, task.root_set, false)
                                     .merged_with(matching_isometry(src_e, task.root_edge_set, false))
                                     .merged_with(matching_isometry(src_rest, dst_rest, false));
    PiecewiseIsometry anchor(high, anchor_map.pieces());

    std::vector<IntervalSet> blocks = build_level_partition(low, high, task.band_width());
    std::vector<IntervalSet> block_targets(blocks.size());
    for (size_t kk = 1; kk < blocks.size(); ++kk)
        block_targets[kk] = anchor.apply(blocks[kk]);

    // Isometry cascade: after step 2k the isometry agrees with the anchor on
    // blocks 1..k. Odd steps swap the wandering top band towards the next
    // block target (identity on the overlap); even steps then align the next
    // block exactly.
    std::vector<PiecewiseIsometry> steps;
    steps.reserve(static_cast<size_t>(2 * s + 1));
    steps.emplace_back(high);  // identity
    for (long kk = 0; kk < s; ++kk) {
        const PiecewiseIsometry& even = steps.back();
        IntervalSet wander = even.apply(blocks[0]);
        const IntervalSet& target = block_targets[static_cast<size_t>(kk) + 1];
        // The final block may be narrower than the band; swap just enough of
        // the wandering band, preferring the part already in place.
        IntervalSet common = wander.intersect(target);
        IntervalSet swap_src =
            common.unite(wander.subtract(target).take_prefix(target.measure() - common.measure()));
        PartialIsometry sigma = matching_isometry(swap_src, target, /*fix_overlap=*/true);
        steps.push_back(extend_swap(even, sigma));

        const PiecewiseIsometry& odd = steps.back();
        IntervalSet displaced = odd.apply(blocks[static_cast<size_t>(kk) + 1]);
        PartialIsometry align = compose(anchor, odd.inverted()).restricted(displaced);
        steps.push_back(extend_swap(odd, align));
    }

    // The last even step must agree with the anchor on the whole low band.
    if (!(steps.back().restricted(IntervalSet(Rat(0), low)) ==
          anchor.restricted(IntervalSet(Rat(0), low))))
        throw std::logic_error("cascade failed to reach the anchor on the base band");

    RecolorResult out;
    out.anchor = anchor;
    out.cascade = steps;
    out.blocks = blocks;
    out.vertex_level = level;
    out.coloring.ambient = high;
    out.coloring.colors.assign(static_cast<size_t>(total_element_count(tree)), IntervalSet());
    for (int v = 0; v < tree.vertex_count(); ++v) {
        ElemId x = vertex_elem(tree, v);
        if (v == task.root) {
            out.coloring.colors[static_cast<size_t>(x)] = task.root_set;
        } else {
            out.coloring.colors[static_cast<size_t>(x)] =
                steps[static_cast<size_t>(level[static_cast<size_t>(v)])].apply(base.color(x));
        }
    }
    for (int e = 0; e < tree.edge_count(); ++e) {
        ElemId x = edge_elem(tree, e);
        int lev = edge_level(tree, level, e);
        out.coloring.colors[static_cast<size_t>(x)] =
            steps[static_cast<size_t>(lev)].apply(base.color(x));
    }

    VerifyReport rep = verify_interval_coloring(tree, out.coloring);
    if (!rep.ok())
        throw std::logic_error("recolored tree failed verification: " + rep.violations.front().detail);
    if (!(out.coloring.color(redge_el) == task.root_edge_set))
        throw std::logic_error("root edge did not land on its target set");
    return out;
}

// ---------------------------------------------------------- split planning

namespace {

// B side selection: fewer vertices first, then lexicographic vertex order.
bool better_b_side(const std::vector<int>& cand, const std::vector<int>& best) {
    if (cand.size() != best.size()) return cand.size() < best.size();
    return cand < best;
}

}  // namespace

SplitOutcome plan_split(const Graph& g, int delta, int d, std::optional<int> subdivisions,
                        int cut_vertex_budget) {
    if (!g.connected()) throw std::invalid_argument("split planning needs a connected graph");
    if (d < 2) throw std::invalid_argument("tree depth must be at least 2");
    if (is_cyclically_k_connected(g, delta, cut_vertex_budget))
        return {SplitStatus::cyclically_connected, std::nullopt};
    std::vector<EdgeCut> cuts = cyclic_cuts_below(g, delta, cut_vertex_budget);
    if (cuts.empty()) return {SplitStatus::no_cut, std::nullopt};

    // Orient every cut so B is the smaller side, then pick the plan with the
    // smallest B overall.
    std::optional<EdgeCut> chosen;
    for (EdgeCut& c : cuts) {
        if (better_b_side(c.side_a, c.side_b)) std::swap(c.side_a, c.side_b);
        if (!chosen || better_b_side(c.side_b, chosen->side_b)) chosen = c;
    }

    SplitPlan plan;
    plan.cut = *chosen;
    plan.d = d;
    plan.d0 = 2 * d + 2;
    plan.subdivisions = subdivisions ? *subdivisions : ((plan.d0 + 1) * delta + 1) / 2;

    // G_X: the B side plus the cut edges.
    Subgraph gx = Subgraph::from_vertices_induced(g, plan.cut.side_b);
    for (int e : plan.cut.cut_edges) gx.add_edge(e);
    plan.gx = gx;
    ExtractedGraph gxg = extract(gx);

    // Connector: d0-closure of the cut inside G_X.
    Subgraph cut_sub(gxg.graph);
    for (int e : plan.cut.cut_edges) cut_sub.add_edge(gxg.edge_from_orig[static_cast<size_t>(e)]);
    Subgraph conn_x = d_connector(gxg.graph, cut_sub, plan.d0);
    Subgraph conn(g);
    for (int e : conn_x.edge_ids()) conn.add_edge(gxg.edge_to_orig[static_cast<size_t>(e)]);
    for (int v : conn_x.vertex_ids()) conn.add_vertex(gxg.vertex_to_orig[static_cast<size_t>(v)]);
    plan.connector = conn;

    Subgraph nbhd_x = neighborhood(gxg.graph, conn_x);
    Subgraph nbhd(g);
    for (int e : nbhd_x.edge_ids()) nbhd.add_edge(gxg.edge_to_orig[static_cast<size_t>(e)]);
    plan.connector_neighborhood = nbhd;
    if (!is_forest(nbhd))
        plan.issues.push_back("connector neighborhood is not a forest at this girth");

    // Boundary edges: connector vertex to a B vertex outside the connector.
    std::vector<char> in_b(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : plan.cut.side_b) in_b[static_cast<size_t>(v)] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.edge(e).u, v = g.edge(e).v;
        bool cu = conn.has_vertex(u), cv = conn.has_vertex(v);
        if (cu == cv) continue;
        int x = cu ? u : v, y = cu ? v : u;
        if (in_b[static_cast<size_t>(y)] && !conn.has_edge(e)) {
            plan.boundary.push_back(e);
            (void)x;
        }
    }

    // Boundary trees: the ball of radius d-1 around the outside endpoint in
    // G_X minus the connector vertices, plus the boundary edge and its root.
    std::vector<char> allowed(static_cast<size_t>(gxg.graph.vertex_count()), 1);
    for (int v : conn_x.vertex_ids()) allowed[static_cast<size_t>(v)] = 0;
    for (int e : plan.boundary) {
        int u = g.edge(e).u, v = g.edge(e).v;
        int x = conn.has_vertex(u) ? u : v;
        int y = conn.has_vertex(u) ? v : u;
        TreeAssignment ta;
        ta.boundary_edge = e;
        ta.root = x;
        ta.far_end = y;
        std::vector<int> bdist =
            bfs_distances(gxg.graph, gxg.vertex_from_orig[static_cast<size_t>(y)], &allowed);
        Subgraph ball(gxg.graph);
        for (int v2 = 0; v2 < gxg.graph.vertex_count(); ++v2)
            if (bdist[static_cast<size_t>(v2)] >= 0 && bdist[static_cast<size_t>(v2)] <= d - 1)
                ball.add_vertex(v2);
        for (int e2 = 0; e2 < gxg.graph.edge_count(); ++e2)
            if (ball.has_vertex(gxg.graph.edge(e2).u) && ball.has_vertex(gxg.graph.edge(e2).v))
                ball.add_edge(e2);
        Subgraph t(g);
        for (int e2 : ball.edge_ids()) t.add_edge(gxg.edge_to_orig[static_cast<size_t>(e2)]);
        for (int v2 : ball.vertex_ids()) t.add_vertex(gxg.vertex_to_orig[static_cast<size_t>(v2)]);
        t.add_edge(e);  // brings in the root x
        ta.tree = t;
        ExtractedGraph tg = extract(t);
        if (tg.graph.edge_count() != tg.graph.vertex_count() - 1 || !tg.graph.connected())
            plan.issues.push_back("boundary component at " + g.label(y) + " is not a tree");
        plan.trees.push_back(std::move(ta));
    }

    // Distinct trees may share only their connector endpoint.
    for (size_t i = 0; i < plan.trees.size(); ++i)
        for (size_t j = i + 1; j < plan.trees.size(); ++j) {
            for (int v : plan.trees[i].tree.vertex_ids()) {
                if (!plan.trees[j].tree.has_vertex(v)) continue;
                if (v == plan.trees[i].root && v == plan.trees[j].root) continue;
                plan.issues.push_back("boundary trees overlap at " + g.label(v));
            }
        }

    // A-side recursion instance: A plus the connector neighborhood, induced.
    std::vector<int> ga_vertices = plan.cut.side_a;
    for (int v : nbhd.vertex_ids()) ga_vertices.push_back(v);
    std::sort(ga_vertices.begin(), ga_vertices.end());
    ga_vertices.erase(std::unique(ga_vertices.begin(), ga_vertices.end()), ga_vertices.end());
    plan.ga_sub = Subgraph::from_vertices_induced(g, ga_vertices);
    plan.ga = extract(plan.ga_sub);
    if (plan.ga.graph.edge_count() >= g.edge_count())
        plan.issues.push_back("A-side instance does not shrink the graph");

    plan.gb = contract_and_subdivide(g, plan.cut.side_a, plan.subdivisions);
    return {SplitStatus::plan, std::move(plan)};
}

// ------------------------------------------------------------------ gluing

IntervalColoring glue_colorings(const Graph& g, const SplitPlan& plan,
                                const IntervalColoring& color_a,
                                const IntervalColoring& color_b, int delta, const Rat& eps,
                                const Rat& eps_prime) {
    Rat high = Rat(delta) + 1 + eps, low = Rat(delta) + 1 + eps_prime;
    if (color_a.ambient != high) throw std::invalid_argument("A-side ambient mismatch");
    if (color_b.ambient != low) throw std::invalid_argument("B-side ambient mismatch");
    VerifyReport repa = verify_interval_coloring(plan.ga.graph, color_a);
    if (!repa.ok())
        throw std::invalid_argument("A-side coloring invalid: " + repa.violations.front().detail);
    VerifyReport repb = verify_interval_coloring(plan.gb.graph, color_b);
    if (!repb.ok())
        throw std::invalid_argument("B-side coloring invalid: " + repb.violations.front().detail);

    int n = total_element_count(g);
    std::vector<char> set_flag(static_cast<size_t>(n), 0);
    IntervalColoring out;
    out.ambient = high;
    out.colors.assign(static_cast<size_t>(n), IntervalSet());
    auto put = [&](ElemId x, const IntervalSet& s) {
        out.colors[static_cast<size_t>(x)] = s;
        set_flag[static_cast<size_t>(x)] = 1;
    };

    // A-side elements keep the A coloring.
    for (int v : plan.ga_sub.vertex_ids())
        put(vertex_elem(g, v),
            color_a.color(vertex_elem(plan.ga.graph, plan.ga.vertex_from_orig[static_cast<size_t>(v)])));
    for (int e : plan.ga_sub.edge_ids())
        put(edge_elem(g, e),
            color_a.color(edge_elem(plan.ga.graph, plan.ga.edge_from_orig[static_cast<size_t>(e)])));

    // Remaining B elements keep the (lifted) contracted coloring. The B side
    // embeds into the contracted graph unchanged.
    std::vector<char> in_b(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : plan.cut.side_b) in_b[static_cast<size_t>(v)] = 1;
    for (int v : plan.cut.side_b) {
        ElemId x = vertex_elem(g, v);
        if (set_flag[static_cast<size_t>(x)]) continue;
        int nv = plan.gb.vertex_to_new[static_cast<size_t>(v)];
        put(x, color_b.color(vertex_elem(plan.gb.graph, nv)));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        ElemId x = edge_elem(g, e);
        if (set_flag[static_cast<size_t>(x)]) continue;
        if (!in_b[static_cast<size_t>(g.edge(e).u)] || !in_b[static_cast<size_t>(g.edge(e).v)]) continue;
        int ne = plan.gb.edge_to_new[static_cast<size_t>(e)];
        if (ne < 0) throw std::logic_error("B-side edge lost by contraction");
        put(x, color_b.color(edge_elem(plan.gb.graph, ne)));
    }

    // Boundary trees: recolor so the tree agrees with the A side at its root
    // and root edge and with the B side on its deepest leaves.
    for (const TreeAssignment& ta : plan.trees) {
        ExtractedGraph tg = extract(ta.tree);
        RecolorTask task;
        task.tree = tg.graph;
        task.root = tg.vertex_from_orig[static_cast<size_t>(ta.root)];
        task.delta = delta;
        task.eps = eps;
        task.eps_prime = eps_prime;
        // The whole tree, root and boundary edge included, lies inside the B
        // side, so the base coloring is the contracted coloring pulled back.
        task.base.ambient = low;
        task.base.colors.assign(static_cast<size_t>(total_element_count(tg.graph)), IntervalSet());
        for (int v = 0; v < tg.graph.vertex_count(); ++v) {
            int ov = tg.vertex_to_orig[static_cast<size_t>(v)];
            int nv = plan.gb.vertex_to_new[static_cast<size_t>(ov)];
            if (nv < 0) throw std::logic_error("tree vertex lost by contraction");
            task.base.colors[static_cast<size_t>(vertex_elem(tg.graph, v))] =
                color_b.color(vertex_elem(plan.gb.graph, nv));
        }
        for (int e = 0; e < tg.graph.edge_count(); ++e) {
            int oe = tg.edge_to_orig[static_cast<size_t>(e)];
            int ne = plan.gb.edge_to_new[static_cast<size_t>(oe)];
            if (ne < 0) throw std::logic_error("tree edge lost by contraction");
            task.base.colors[static_cast<size_t>(edge_elem(tg.graph, e))] =
                color_b.color(edge_elem(plan.gb.graph, ne));
        }

        ElemId ax = vertex_elem(plan.ga.graph, plan.ga.vertex_from_orig[static_cast<size_t>(ta.root)]);
        ElemId ae = edge_elem(plan.ga.graph, plan.ga.edge_from_orig[static_cast<size_t>(ta.boundary_edge)]);
        task.root_set = color_a.color(ax).take_prefix(Rat(1));
        task.root_edge_set = color_a.color(ae).take_prefix(Rat(1));

        RecolorResult res = recolor_tree(task);
        for (int v = 0; v < tg.graph.vertex_count(); ++v)
            put(vertex_elem(g, tg.vertex_to_orig[static_cast<size_t>(v)]),
                res.coloring.color(vertex_elem(tg.graph, v)));
        for (int e = 0; e < tg.graph.edge_count(); ++e)
            put(edge_elem(g, tg.edge_to_orig[static_cast<size_t>(e)]),
                res.coloring.color(edge_elem(tg.graph, e)));
    }

    for (int x = 0; x < n; ++x)
        if (!set_flag[static_cast<size_t>(x)])
            throw std::logic_error("element " + elem_str(g, x) + " not covered by the glue");

    VerifyReport rep = verify_interval_coloring(g, out);
    if (!rep.ok())
        throw std::runtime_error("glued coloring failed verification: " +
                                 rep.violations.front().detail);
    return out;
}

// ------------------------------------------------------------ orchestrator

namespace {

using nlohmann::json;

struct Builder {
    const ConstructOptions& opts;
    int delta_top;

    struct Step {
        std::optional<IntervalColoring> coloring;
        json trace;
    };

    // Produces a verified coloring of `g` at ambient delta_top+1+eps_target,
    // or a trace explaining the failure.
    Step build(const Graph& g, const Rat& eps_target, int depth) {
        Step st;
        st.trace["vertices"] = g.vertex_count();
        st.trace["edges"] = g.edge_count();
        st.trace["target_ambient"] = rat_str(Rat(delta_top) + 1 + eps_target);
        if (depth > opts.max_depth) {
            st.trace["branch"] = "fail";
            st.trace["reason"] = "recursion depth limit";
            return st;
        }
        int elems = total_element_count(g);
        bool lp_allowed = opts.branch != ConstructOptions::Branch::pipeline_only;
        bool pipeline_allowed = opts.branch != ConstructOptions::Branch::lp_only;
        if (lp_allowed && elems <= opts.lp_colgen_budget) {
            lp_branch(g, eps_target, st,
                      elems <= opts.lp_enum_budget ? ChiMode::enumerate
                                                   : ChiMode::column_generation);
            return st;
        }
        if (!pipeline_allowed) {
            st.trace["branch"] = "fail";
            st.trace["reason"] = "instance exceeds the LP budget and the pipeline is disabled";
            return st;
        }
        pipeline_branch(g, eps_target, depth, st);
        return st;
    }

    void lp_branch(const Graph& g, const Rat& eps_target, Step& st, ChiMode mode) {
        st.trace["branch"] = "lp";
        st.trace["mode"] = mode == ChiMode::enumerate ? "enumerate" : "column-generation";
        ChiResult chi = fractional_total_chromatic_number(
            g, mode, opts.lp_enum_budget);
        st.trace["chi"] = rat_str(chi.value);
        Rat ambient = Rat(delta_top) + 1 + eps_target;
        if (chi.value > ambient) {
            st.trace["reason"] = "exact optimum " + rat_str(chi.value) +
                                 " exceeds the target ambient " + rat_str(ambient);
            return;
        }
        IntervalColoring c = weights_to_interval_assignment(g, chi.coloring, ambient);
        VerifyReport rep = verify_interval_coloring(g, c);
        if (!rep.ok()) {
            st.trace["reason"] = "interval assignment failed verification: " +
                                 rep.violations.front().detail;
            return;
        }
        st.trace["verified"] = true;
        st.coloring = std::move(c);
    }

    void pipeline_branch(const Graph& g, const Rat& eps_target, int depth, Step& st) {
        int delta_g = max_degree(g);
        bool cyclic = false;
        try {
            cyclic = delta_g == delta_top &&
                     is_cyclically_k_connected(g, delta_top, opts.cut_vertex_budget);
        } catch (const BudgetExceeded& ex) {
            st.trace["branch"] = "fail";
            st.trace["reason"] = std::string("cut enumeration refused: ") + ex.what();
            return;
        }
        if (delta_g < delta_top) {
            st.trace["branch"] = "fail";
            st.trace["reason"] =
                "maximum degree below the target (direct solve applies) but the "
                "instance exceeds the LP budget";
            return;
        }
        if (cyclic) {
            cyclic_branch(g, eps_target, st);
            return;
        }
        split_branch(g, eps_target, depth, st);
    }

    // Decomposition + per-factor colorings + convex combination.
    void cyclic_branch(const Graph& g, const Rat& eps_target, Step& st) {
        st.trace["branch"] = "cyclic";
        int delta = delta_top;
        if (delta % 2 == 0 || delta < 5) {
            st.trace["reason"] = "composition requires odd maximum degree at least 5";
            return;
        }
        DecompositionSearch ds = ell_decomposition(g, delta, opts.decomposition_budget);
        if (!ds.result) {
            st.trace["reason"] = ds.complete ? "no delta-decomposition exists"
                                             : "decomposition search budget exhausted";
            return;
        }
        st.trace["decomposition_found"] = true;
        const Decomposition& dec = *ds.result;
        int k = delta / 2;
        Rat eps_prime = eps_target / 2;
        Rat vertex_floor = 1 / (Rat(delta) + eps_prime);
        Rat edge_floor = Rat(delta - 1) / (2 * (Rat(delta) + eps_prime));
        std::vector<WeightedColoring> factors;
        ChiMode mode = total_element_count(g) <= opts.lp_enum_budget
                           ? ChiMode::enumerate
                           : ChiMode::column_generation;
        json factor_log = json::array();
        for (int p = 0; p <= k; ++p) {
            if (p == *dec.matching_index) continue;
            std::vector<Rat> bounds(static_cast<size_t>(total_element_count(g)), Rat(0));
            for (int v = 0; v < g.vertex_count(); ++v)
                bounds[static_cast<size_t>(vertex_elem(g, v))] = vertex_floor;
            for (int e : dec.parts[static_cast<size_t>(p)])
                bounds[static_cast<size_t>(edge_elem(g, e))] = edge_floor;
            auto sol = solve_weighted_coloring(g, bounds, mode, opts.lp_enum_budget);
            if (std::holds_alternative<CoverageInfeasible>(sol)) {
                const auto& inf = std::get<CoverageInfeasible>(sol);
                factor_log.push_back({{"factor", p},
                                      {"status", "infeasible"},
                                      {"required_mass", rat_str(inf.required_mass)}});
                st.trace["factors"] = factor_log;
                st.trace["reason"] = "factor coloring infeasible at this girth (factor " +
                                     std::to_string(p) + " needs mass " +
                                     rat_str(inf.required_mass) + ")";
                return;
            }
            factor_log.push_back({{"factor", p}, {"status", "feasible"}});
            factors.push_back(std::get<WeightedColoring>(sol));
        }
        st.trace["factors"] = factor_log;
        WeightedColoring combined;
        try {
            combined = compose_factor_colorings(g, dec, factors, eps_target);
        } catch (const std::exception& ex) {
            st.trace["reason"] = std::string("composition failed: ") + ex.what();
            return;
        }
        Rat alpha = composed_coverage_floor(delta, eps_target);
        WeightedColoring fractional = weighted_to_fractional(combined, alpha);
        Rat ambient = Rat(delta_top) + 1 + eps_target;
        IntervalColoring c = weights_to_interval_assignment(g, fractional, ambient);
        VerifyReport rep = verify_interval_coloring(g, c);
        if (!rep.ok()) {
            st.trace["reason"] = "composed coloring failed verification: " +
                                 rep.violations.front().detail;
            return;
        }
        st.trace["verified"] = true;
        st.coloring = std::move(c);
    }

    void split_branch(const Graph& g, const Rat& eps_target, int depth, Step& st) {
        st.trace["branch"] = "split";
        Rat eps_prime = eps_target / 2;
        RecolorTask probe;  // only for the depth formula
        probe.delta = delta_top;
        probe.eps = eps_target;
        probe.eps_prime = eps_prime;
        int d = probe.depth();
        st.trace["tree_depth"] = d;
        SplitOutcome so;
        try {
            so = plan_split(g, delta_top, d, std::nullopt, opts.cut_vertex_budget);
        } catch (const BudgetExceeded& ex) {
            st.trace["reason"] = std::string("cut enumeration refused: ") + ex.what();
            return;
        }
        if (so.status != SplitStatus::plan) {
            st.trace["reason"] = so.status == SplitStatus::cyclically_connected
                                     ? "graph is cyclically delta-connected"
                                     : "no cyclic edge-cut below delta";
            return;
        }
        const SplitPlan& plan = *so.plan;
        json cutj;
        cutj["cut_size"] = plan.cut.cut_edges.size();
        json bside = json::array();
        for (int v : plan.cut.side_b) bside.push_back(g.label(v));
        cutj["b_side"] = bside;
        cutj["tie_break"] = "lexicographic vertex order";
        cutj["subdivisions"] = plan.subdivisions;
        st.trace["cut"] = cutj;
        if (!plan.issues.empty()) {
            st.trace["plan_issues"] = plan.issues;
            st.trace["reason"] = "split hypotheses fail at this scale: " + plan.issues.front();
            return;
        }
        Step a = build(plan.ga.graph, eps_target, depth + 1);
        st.trace["a_side"] = a.trace;
        if (!a.coloring) {
            st.trace["reason"] = "A side failed";
            return;
        }
        Step b = build(plan.gb.graph, eps_prime, depth + 1);
        st.trace["b_side"] = b.trace;
        if (!b.coloring) {
            st.trace["reason"] = "B side failed";
            return;
        }
        try {
            IntervalColoring merged = glue_colorings(g, plan, *a.coloring, *b.coloring,
                                                     delta_top, eps_target, eps_prime);
            st.trace["verified"] = true;
            st.coloring = std::move(merged);
        } catch (const std::exception& ex) {
            st.trace["reason"] = std::string("glue failed: ") + ex.what();
        }
    }
};

}  // namespace

ConstructResult construct_coloring(const Graph& g, const Rat& eps, const ConstructOptions& opts) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (!g.connected()) throw std::invalid_argument("construction needs a connected graph");
    ConstructOptions local = opts;
    if (local.eps_prime && !(*local.eps_prime > 0 && *local.eps_prime < eps))
        throw std::invalid_argument("eps_prime must satisfy 0 < eps_prime < eps");
    Builder builder{local, max_degree(g)};
    Builder::Step st = builder.build(g, eps, 0);
    ConstructResult out;
    out.trace = std::move(st.trace);
    if (st.coloring) {
        out.success = true;
        out.coloring = std::move(st.coloring);
    } else {
        out.reason = out.trace.contains("reason") ? out.trace["reason"].get<std::string>()
                                                  : "construction failed";
    }
    return out;
}

}  // namespace ftc

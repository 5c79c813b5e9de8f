#include "ftc/total.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ftc {

std::string elem_str(const Graph& g, ElemId x) {
    if (!elem_is_edge(g, x)) return "v:" + g.label(x);
    const Graph::Edge& e = g.edge(elem_id(g, x));
    return "e:" + g.label(e.u) + "-" + g.label(e.v);
}

ElemId elem_parse(const Graph& g, const std::string& s) {
    if (s.rfind("v:", 0) == 0) {
        std::string lab = s.substr(2);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.label(v) == lab) return vertex_elem(g, v);
        throw std::invalid_argument("unknown vertex label: " + s);
    }
    if (s.rfind("e:", 0) == 0) {
        std::string body = s.substr(2);
        // Labels may themselves contain '-', so try every split position.
        for (size_t pos = body.find('-'); pos != std::string::npos; pos = body.find('-', pos + 1)) {
            std::string la = body.substr(0, pos), lb = body.substr(pos + 1);
            int u = -1, v = -1;
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (g.label(w) == la) u = w;
                if (g.label(w) == lb) v = w;
            }
            if (u < 0 || v < 0) continue;
            if (auto e = g.find_edge(u, v)) return edge_elem(g, *e);
        }
        throw std::invalid_argument("unknown edge element: " + s);
    }
    throw std::invalid_argument("element must start with 'v:' or 'e:': " + s);
}

// -------------------------------------------------------------- adjacency

TotalAdjacency::TotalAdjacency(const Graph& g)
    : n_(total_element_count(g)), words_((static_cast<size_t>(n_) + 63) / 64) {
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    for (auto& e : g.edges()) {
        int id = &e - g.edges().data();
        set(vertex_elem(g, e.u), vertex_elem(g, e.v));   // adjacent vertices
        set(vertex_elem(g, e.u), edge_elem(g, id));      // incidences
        set(vertex_elem(g, e.v), edge_elem(g, id));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                set(edge_elem(g, inc[i].second), edge_elem(g, inc[j].second));
    }
}

void TotalAdjacency::set(ElemId a, ElemId b) {
    bits_[static_cast<size_t>(a) * words_ + (static_cast<size_t>(b) >> 6)] |= 1ull << (b & 63);
    bits_[static_cast<size_t>(b) * words_ + (static_cast<size_t>(a) >> 6)] |= 1ull << (a & 63);
}

Graph total_graph(const Graph& g) {
    int n = total_element_count(g);
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) labels[static_cast<size_t>(x)] = elem_str(g, x);
    Graph t(std::move(labels));
    TotalAdjacency adj(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (adj.adjacent(a, b)) t.add_edge(a, b);
    return t;
}

bool is_total_independent(const Graph& g, const TotalIndependentSet& set) {
    TotalAdjacency adj(g);
    for (size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 0 || set[i] >= total_element_count(g))
            throw std::invalid_argument("element id out of range");
        for (size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || adj.adjacent(set[i], set[j])) return false;
    }
    return true;
}

bool is_total_independent(const Graph& g, const std::vector<TotalElement>& elems) {
    TotalIndependentSet set;
    for (auto& t : elems) {
        if (t.id < 0 || (t.is_edge ? t.id >= g.edge_count() : t.id >= g.vertex_count()))
            throw std::invalid_argument("element id does not resolve in host graph");
        set.push_back(t.is_edge ? edge_elem(g, t.id) : vertex_elem(g, t.id));
    }
    return is_total_independent(g, set);
}

// ------------------------------------------------------------- enumeration

namespace {

using Words = std::vector<uint64_t>;

struct BitOps {
    size_t w;
    bool any(const Words& a) const {
        for (size_t i = 0; i < w; ++i)
            if (a[i]) return true;
        return false;
    }
    int count_and(const Words& a, const uint64_t* b) const {
        int c = 0;
        for (size_t i = 0; i < w; ++i) c += std::popcount(a[i] & b[i]);
        return c;
    }
};

// Bron-Kerbosch with pivoting on the complement of the total adjacency:
// maximal independent sets of T(G) are maximal cliques of its complement.
// Here cand/excl hold elements NOT conflicting with the current set, and
// expanding removes closed neighborhoods in the complement, i.e. keeps
// non-neighbors-in-T out.
struct TisEnumerator {
    const TotalAdjacency& adj;
    int n;
    BitOps ops;
    std::vector<Words> nonadj;  // complement rows, self-bit cleared
    std::vector<TotalIndependentSet> out;
    std::vector<ElemId> cur;

    explicit TisEnumerator(const TotalAdjacency& a) : adj(a), n(a.count()) {
        ops.w = static_cast<size_t>(a.words());
        nonadj.assign(static_cast<size_t>(n), Words(ops.w, 0));
        for (int x = 0; x < n; ++x) {
            for (size_t i = 0; i < ops.w; ++i) nonadj[static_cast<size_t>(x)][i] = ~adj.row(x)[i];
            // trim tail bits and the diagonal
            size_t last = ops.w - 1;
            int tail = n - static_cast<int>(last) * 64;
            if (tail < 64) nonadj[static_cast<size_t>(x)][last] &= (1ull << tail) - 1;
            nonadj[static_cast<size_t>(x)][static_cast<size_t>(x) >> 6] &= ~(1ull << (x & 63));
        }
    }

    void run() {
        Words cand(ops.w, 0), excl(ops.w, 0);
        for (int x = 0; x < n; ++x) cand[static_cast<size_t>(x) >> 6] |= 1ull << (x & 63);
        expand(cand, excl);
        for (auto& s : out) std::sort(s.begin(), s.end());
        std::sort(out.begin(), out.end());
    }

    void expand(Words cand, Words excl) {
        if (!ops.any(cand) && !ops.any(excl)) {
            out.push_back(cur);
            return;
        }
        // Pivot: element of cand u excl with most complement-neighbors in cand.
        int pivot = -1, best = -1;
        for (size_t i = 0; i < ops.w; ++i) {
            uint64_t both = cand[i] | excl[i];
            while (both) {
                int x = static_cast<int>(i * 64) + std::countr_zero(both);
                both &= both - 1;
                int c = ops.count_and(cand, nonadj[static_cast<size_t>(x)].data());
                if (c > best) { best = c; pivot = x; }
            }
        }
        for (size_t i = 0; i < ops.w; ++i) {
            uint64_t todo = cand[i] & ~nonadj[static_cast<size_t>(pivot)][i];
            while (todo) {
                int x = static_cast<int>(i * 64) + std::countr_zero(todo);
                todo &= todo - 1;
                Words ncand(ops.w), nexcl(ops.w);
                for (size_t k = 0; k < ops.w; ++k) {
                    ncand[k] = cand[k] & nonadj[static_cast<size_t>(x)][k];
                    nexcl[k] = excl[k] & nonadj[static_cast<size_t>(x)][k];
                }
                cur.push_back(x);
                expand(std::move(ncand), std::move(nexcl));
                cur.pop_back();
                cand[i] &= ~(1ull << (x & 63));
                excl[i] |= 1ull << (x & 63);
                todo &= cand[i];
            }
        }
    }
};

}  // namespace

std::vector<TotalIndependentSet> enumerate_maximal_tis(const Graph& g, int budget) {
    if (total_element_count(g) > budget)
        throw BudgetExceeded("total graph has " + std::to_string(total_element_count(g)) +
                             " elements, enumeration budget is " + std::to_string(budget));
    TotalAdjacency adj(g);
    TisEnumerator en(adj);
    en.run();
    return en.out;
}

// ---------------------------------------------------------- pricing oracle

namespace {

struct MwisSearch {
    const TotalAdjacency& adj;
    const std::vector<Rat>& weight;
    int n;
    BitOps ops;
    std::vector<int> order;  // element ids, weight descending
    std::vector<Words> conflict;  // closed T-neighborhood rows in `order` indexing
    Rat best;
    std::vector<int> best_set, cur;

    MwisSearch(const TotalAdjacency& a, const std::vector<Rat>& w)
        : adj(a), weight(w), n(a.count()), best(0) {
        ops.w = static_cast<size_t>(a.words());
        order.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return w[static_cast<size_t>(x)] > w[static_cast<size_t>(y)]; });
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        conflict.assign(static_cast<size_t>(n), Words(ops.w, 0));
        for (int i = 0; i < n; ++i) {
            int x = order[static_cast<size_t>(i)];
            for (int y = 0; y < n; ++y)
                if (y == x || adj.adjacent(x, y)) {
                    int j = pos[static_cast<size_t>(y)];
                    conflict[static_cast<size_t>(i)][static_cast<size_t>(j) >> 6] |= 1ull << (j & 63);
                }
        }
    }

    void run() {
        Words cand(ops.w, 0);
        Rat total = 0;
        for (int i = 0; i < n; ++i) {
            cand[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63);
            total += weight[static_cast<size_t>(order[static_cast<size_t>(i)])];
        }
        dive(cand, Rat(0), total);
    }

    void dive(Words cand, Rat cur_w, Rat cand_w) {
        // Prune on <=: the first incumbent among equal-value sets is kept,
        // which makes the answer deterministic.
        if (cur_w + cand_w <= best) return;
        int first = -1;
        for (size_t i = 0; i < ops.w && first < 0; ++i)
            if (cand[i]) first = static_cast<int>(i * 64) + std::countr_zero(cand[i]);
        if (first < 0) {
            best = cur_w;
            best_set = cur;
            return;
        }
        // Include `first`.
        Words ncand(ops.w);
        Rat removed = 0;
        for (size_t k = 0; k < ops.w; ++k) {
            uint64_t gone = cand[k] & conflict[static_cast<size_t>(first)][k];
            uint64_t g2 = gone;
            while (g2) {
                int j = static_cast<int>(k * 64) + std::countr_zero(g2);
                g2 &= g2 - 1;
                removed += weight[static_cast<size_t>(order[static_cast<size_t>(j)])];
            }
            ncand[k] = cand[k] & ~conflict[static_cast<size_t>(first)][k];
        }
        cur.push_back(first);
        dive(std::move(ncand), cur_w + weight[static_cast<size_t>(order[static_cast<size_t>(first)])],
             cand_w - removed);
        cur.pop_back();
        // Exclude `first`.
        cand[static_cast<size_t>(first) >> 6] &= ~(1ull << (first & 63));
        dive(std::move(cand), cur_w,
             cand_w - weight[static_cast<size_t>(order[static_cast<size_t>(first)])]);
    }
};

}  // namespace

MaxWeightResult max_weight_tis(const Graph& g, const std::vector<Rat>& weight) {
    int n = total_element_count(g);
    if (static_cast<int>(weight.size()) != n)
        throw std::invalid_argument("weight vector size mismatch");
    for (auto& w : weight)
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    TotalAdjacency adj(g);
    MwisSearch search(adj, weight);
    search.run();
    MaxWeightResult res;
    res.weight = search.best;
    for (int i : search.best_set) res.set.push_back(search.order[static_cast<size_t>(i)]);
    // Pad to a maximal set; zero-weight elements cannot lower the value.
    std::sort(res.set.begin(), res.set.end());
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (int y : res.set)
            if (y == x || adj.adjacent(x, y)) { ok = false; break; }
        if (ok) {
            res.set.push_back(x);
            std::sort(res.set.begin(), res.set.end());
        }
    }
    return res;
}

}  // namespace ftc

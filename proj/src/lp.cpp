#include "ftc/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ftc {

// ---------------------------------------------------------------- simplex

namespace {

// Dense two-phase tableau simplex with Bland's pivoting rule throughout,
// which rules out cycling. All arithmetic is exact.
class Simplex {
public:
    explicit Simplex(const LinearProgram& lp) : lp_(lp) { standardize(); }

    LPCertificate run() {
        LPCertificate cert;
        // Phase 1: minimize the sum of artificials.
        if (!artificials_.empty()) {
            price_with(phase1_cost_);
            iterate(/*allow_artificial=*/true);
            if (obj_value_ != 0) {
                cert.status = LPStatus::infeasible;
                cert.value = obj_value_;
                cert.dual = extract_dual(phase1_cost_);
                return cert;
            }
            drive_out_artificials();
        }
        price_with(phase2_cost_);
        if (!iterate(/*allow_artificial=*/false)) {
            cert.status = LPStatus::unbounded;
            return cert;
        }
        cert.status = LPStatus::optimal;
        cert.primal.assign(ncols_, Rat(0));
        for (size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] < ncols_) cert.primal[static_cast<size_t>(basis_[i])] = tab_[i].back();
        cert.dual = extract_dual(phase2_cost_);
        cert.value = 0;
        for (int j = 0; j < ncols_; ++j)
            cert.value += lp_.objective[static_cast<size_t>(j)] * cert.primal[static_cast<size_t>(j)];
        return cert;
    }

private:
    const LinearProgram& lp_;
    int m_ = 0, ncols_ = 0, nvars_ = 0;
    std::vector<std::vector<Rat>> tab_;   // m rows x (nvars + 1), last col = rhs
    std::vector<int> basis_;
    std::vector<Rat> obj_row_;            // reduced costs, nvars entries
    Rat obj_value_;                       // current objective of the priced cost
    std::vector<Rat> phase1_cost_, phase2_cost_;
    std::vector<char> is_artificial_;
    std::vector<int> artificials_;
    std::vector<char> flipped_;           // rows multiplied by -1 to get rhs >= 0
    std::vector<std::vector<Rat>> std_cols_;  // standardized column vectors (for duals)

    void standardize() {
        m_ = static_cast<int>(lp_.rows.size());
        ncols_ = m_ ? static_cast<int>(lp_.rows[0].size()) : static_cast<int>(lp_.objective.size());
        if (static_cast<int>(lp_.objective.size()) != ncols_)
            throw std::invalid_argument("objective size mismatch");
        flipped_.assign(static_cast<size_t>(m_), 0);

        std::vector<std::vector<Rat>> rows = lp_.rows;
        std::vector<Rat> rhs = lp_.rhs;
        std::vector<Sense> sense = lp_.sense;
        for (int i = 0; i < m_; ++i) {
            if (rhs[static_cast<size_t>(i)] < 0) {
                flipped_[static_cast<size_t>(i)] = 1;
                rhs[static_cast<size_t>(i)] = -rhs[static_cast<size_t>(i)];
                for (auto& x : rows[static_cast<size_t>(i)]) x = -x;
                if (sense[static_cast<size_t>(i)] == Sense::LE) sense[static_cast<size_t>(i)] = Sense::GE;
                else if (sense[static_cast<size_t>(i)] == Sense::GE) sense[static_cast<size_t>(i)] = Sense::LE;
            }
        }

        // Count extra variables: slack/surplus per inequality, artificial for
        // GE and EQ rows.
        int extra = 0;
        for (int i = 0; i < m_; ++i) {
            if (sense[static_cast<size_t>(i)] != Sense::EQ) ++extra;
            if (sense[static_cast<size_t>(i)] != Sense::LE) ++extra;
        }
        nvars_ = ncols_ + extra;
        tab_.assign(static_cast<size_t>(m_), std::vector<Rat>(static_cast<size_t>(nvars_) + 1, Rat(0)));
        is_artificial_.assign(static_cast<size_t>(nvars_), 0);
        basis_.assign(static_cast<size_t>(m_), -1);

        int next = ncols_;
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < ncols_; ++j) tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            tab_[static_cast<size_t>(i)].back() = rhs[static_cast<size_t>(i)];
            if (sense[static_cast<size_t>(i)] == Sense::LE) {
                tab_[static_cast<size_t>(i)][static_cast<size_t>(next)] = 1;
                basis_[static_cast<size_t>(i)] = next++;
            } else if (sense[static_cast<size_t>(i)] == Sense::GE) {
                tab_[static_cast<size_t>(i)][static_cast<size_t>(next)] = -1;
                ++next;
                tab_[static_cast<size_t>(i)][static_cast<size_t>(next)] = 1;
                is_artificial_[static_cast<size_t>(next)] = 1;
                artificials_.push_back(next);
                basis_[static_cast<size_t>(i)] = next++;
            } else {
                tab_[static_cast<size_t>(i)][static_cast<size_t>(next)] = 1;
                is_artificial_[static_cast<size_t>(next)] = 1;
                artificials_.push_back(next);
                basis_[static_cast<size_t>(i)] = next++;
            }
        }

        phase1_cost_.assign(static_cast<size_t>(nvars_), Rat(0));
        for (int a : artificials_) phase1_cost_[static_cast<size_t>(a)] = 1;
        phase2_cost_.assign(static_cast<size_t>(nvars_), Rat(0));
        for (int j = 0; j < ncols_; ++j) phase2_cost_[static_cast<size_t>(j)] = lp_.objective[static_cast<size_t>(j)];

        std_cols_.assign(static_cast<size_t>(nvars_), std::vector<Rat>(static_cast<size_t>(m_), Rat(0)));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < nvars_; ++j)
                if (tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                    std_cols_[static_cast<size_t>(j)][static_cast<size_t>(i)] = tab_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    // Recomputes the reduced-cost row and objective for the given cost
    // vector under the current basis.
    void price_with(const std::vector<Rat>& cost) {
        obj_row_.assign(static_cast<size_t>(nvars_), Rat(0));
        obj_value_ = 0;
        for (int j = 0; j < nvars_; ++j) obj_row_[static_cast<size_t>(j)] = cost[static_cast<size_t>(j)];
        for (int i = 0; i < m_; ++i) {
            const Rat& cb = cost[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
            if (cb == 0) continue;
            for (int j = 0; j < nvars_; ++j)
                obj_row_[static_cast<size_t>(j)] -= cb * tab_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            obj_value_ += cb * tab_[static_cast<size_t>(i)].back();
        }
    }

    void pivot(int r, int s) {
        std::vector<Rat>& row = tab_[static_cast<size_t>(r)];
        Rat inv = 1 / row[static_cast<size_t>(s)];
        for (auto& x : row) x *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            Rat f = tab_[static_cast<size_t>(i)][static_cast<size_t>(s)];
            if (f == 0) continue;
            std::vector<Rat>& ri = tab_[static_cast<size_t>(i)];
            for (int j = 0; j <= nvars_; ++j)
                if (row[static_cast<size_t>(j)] != 0) ri[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
        }
        Rat f = obj_row_[static_cast<size_t>(s)];
        if (f != 0) {
            for (int j = 0; j < nvars_; ++j)
                if (row[static_cast<size_t>(j)] != 0) obj_row_[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
            obj_value_ += f * row.back();
        }
        basis_[static_cast<size_t>(r)] = s;
    }

    // Returns false on unboundedness.
    bool iterate(bool allow_artificial) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < nvars_; ++j) {
                if (!allow_artificial && is_artificial_[static_cast<size_t>(j)]) continue;
                if (obj_row_[static_cast<size_t>(j)] < 0) { enter = j; break; }  // Bland: lowest index
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < m_; ++i) {
                const Rat& a = tab_[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (a <= 0) continue;
                Rat ratio = tab_[static_cast<size_t>(i)].back() / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    // After phase 1 at value zero, pivot basic artificials out where the row
    // has support on a real variable; rows without support are redundant and
    // keep their zero-valued artificial.
    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (!is_artificial_[static_cast<size_t>(basis_[static_cast<size_t>(i)])]) continue;
            for (int j = 0; j < nvars_; ++j) {
                if (is_artificial_[static_cast<size_t>(j)]) continue;
                if (tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    // Solves B^T y = cost_B exactly by Gaussian elimination over the
    // standardized basis columns, then maps back to the original row
    // orientation.
    std::vector<Rat> extract_dual(const std::vector<Rat>& cost) const {
        int m = m_;
        std::vector<std::vector<Rat>> aug(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(m) + 1, Rat(0)));
        for (int r = 0; r < m; ++r) {  // row r of B^T = column basis_[r] of B
            const std::vector<Rat>& col = std_cols_[static_cast<size_t>(basis_[static_cast<size_t>(r)])];
            for (int i = 0; i < m; ++i) aug[static_cast<size_t>(r)][static_cast<size_t>(i)] = col[static_cast<size_t>(i)];
            aug[static_cast<size_t>(r)].back() = cost[static_cast<size_t>(basis_[static_cast<size_t>(r)])];
        }
        for (int c = 0; c < m; ++c) {
            int p = -1;
            for (int r = c; r < m; ++r)
                if (aug[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { p = r; break; }
            if (p < 0) throw std::logic_error("singular basis");
            std::swap(aug[static_cast<size_t>(c)], aug[static_cast<size_t>(p)]);
            Rat inv = 1 / aug[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (auto& x : aug[static_cast<size_t>(c)]) x *= inv;
            for (int r = 0; r < m; ++r) {
                if (r == c) continue;
                Rat f = aug[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (f == 0) continue;
                for (int j = c; j <= m; ++j)
                    aug[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * aug[static_cast<size_t>(c)][static_cast<size_t>(j)];
            }
        }
        std::vector<Rat> y(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            y[static_cast<size_t>(i)] = flipped_[static_cast<size_t>(i)] ? -aug[static_cast<size_t>(i)].back() : aug[static_cast<size_t>(i)].back();
        return y;
    }
};

}  // namespace

LPCertificate simplex_solve(const LinearProgram& lp) {
    Simplex s(lp);
    LPCertificate cert = s.run();
    std::string err = check_certificate(lp, cert);
    if (!err.empty()) throw std::logic_error("simplex certificate check failed: " + err);
    return cert;
}

std::string check_certificate(const LinearProgram& lp, const LPCertificate& cert) {
    int m = static_cast<int>(lp.rows.size());
    int n = m ? static_cast<int>(lp.rows[0].size()) : 0;
    if (cert.status == LPStatus::unbounded) return "";
    if (static_cast<int>(cert.dual.size()) != m) return "dual size mismatch";

    if (cert.status == LPStatus::infeasible) {
        // Farkas: y respects row signs, y^T A <= 0 columnwise, y^T b > 0.
        Rat yb = 0;
        for (int i = 0; i < m; ++i) {
            if (lp.sense[static_cast<size_t>(i)] == Sense::GE && cert.dual[static_cast<size_t>(i)] < 0) return "farkas sign (GE)";
            if (lp.sense[static_cast<size_t>(i)] == Sense::LE && cert.dual[static_cast<size_t>(i)] > 0) return "farkas sign (LE)";
            yb += cert.dual[static_cast<size_t>(i)] * lp.rhs[static_cast<size_t>(i)];
        }
        if (yb <= 0) return "farkas objective not positive";
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (int i = 0; i < m; ++i) s += cert.dual[static_cast<size_t>(i)] * lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (s > 0) return "farkas column positive";
        }
        return "";
    }

    if (static_cast<int>(cert.primal.size()) != n) return "primal size mismatch";
    // Primal feasibility.
    for (int j = 0; j < n; ++j)
        if (cert.primal[static_cast<size_t>(j)] < 0) return "negative primal";
    for (int i = 0; i < m; ++i) {
        Rat lhs = 0;
        for (int j = 0; j < n; ++j) lhs += lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] * cert.primal[static_cast<size_t>(j)];
        const Rat& b = lp.rhs[static_cast<size_t>(i)];
        if (lp.sense[static_cast<size_t>(i)] == Sense::LE && lhs > b) return "primal row violated (LE)";
        if (lp.sense[static_cast<size_t>(i)] == Sense::GE && lhs < b) return "primal row violated (GE)";
        if (lp.sense[static_cast<size_t>(i)] == Sense::EQ && lhs != b) return "primal row violated (EQ)";
    }
    // Dual feasibility for the minimization dual: max y.b, A^T y <= c,
    // y >= 0 on GE rows, y <= 0 on LE rows, free on EQ rows.
    for (int i = 0; i < m; ++i) {
        if (lp.sense[static_cast<size_t>(i)] == Sense::GE && cert.dual[static_cast<size_t>(i)] < 0) return "dual sign (GE)";
        if (lp.sense[static_cast<size_t>(i)] == Sense::LE && cert.dual[static_cast<size_t>(i)] > 0) return "dual sign (LE)";
    }
    for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += cert.dual[static_cast<size_t>(i)] * lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (s > lp.objective[static_cast<size_t>(j)]) return "dual column violated";
    }
    // Strong duality.
    Rat primal_obj = 0, dual_obj = 0;
    for (int j = 0; j < n; ++j) primal_obj += lp.objective[static_cast<size_t>(j)] * cert.primal[static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i) dual_obj += cert.dual[static_cast<size_t>(i)] * lp.rhs[static_cast<size_t>(i)];
    if (primal_obj != dual_obj) return "objective gap";
    if (primal_obj != cert.value) return "stated value differs";
    return "";
}

// ------------------------------------------------------- weighted colorings

void WeightedColoring::add(const TotalIndependentSet& set, const Rat& w) {
    if (w < 0) throw std::invalid_argument("negative weight");
    if (w == 0) return;
    TotalIndependentSet key = set;
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(support_.begin(), support_.end(), key,
                               [](const auto& a, const TotalIndependentSet& k) { return a.first < k; });
    if (it != support_.end() && it->first == key) it->second += w;
    else support_.insert(it, {key, w});
}

void WeightedColoring::scale(const Rat& f) {
    for (auto& [s, w] : support_) w *= f;
}

Rat WeightedColoring::mass() const {
    Rat m = 0;
    for (auto& [s, w] : support_) m += w;
    return m;
}

Rat WeightedColoring::coverage(ElemId x) const {
    Rat c = 0;
    for (auto& [s, w] : support_)
        if (std::binary_search(s.begin(), s.end(), x)) c += w;
    return c;
}

std::vector<Rat> WeightedColoring::coverage_vector() const {
    std::vector<Rat> cov(static_cast<size_t>(total_element_count(*host_)), Rat(0));
    for (auto& [s, w] : support_)
        for (ElemId x : s) cov[static_cast<size_t>(x)] += w;
    return cov;
}

bool WeightedColoring::valid_support() const {
    for (auto& [s, w] : support_) {
        if (w < 0) return false;
        if (!is_total_independent(*host_, s)) return false;
    }
    return true;
}

// --------------------------------------------------------------- LP drivers

namespace {

LinearProgram covering_lp(const std::vector<TotalIndependentSet>& columns,
                          const std::vector<Rat>& bounds) {
    int m = static_cast<int>(bounds.size());
    int n = static_cast<int>(columns.size());
    LinearProgram lp;
    lp.rows.assign(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    lp.rhs = bounds;
    lp.sense.assign(static_cast<size_t>(m), Sense::GE);
    lp.objective.assign(static_cast<size_t>(n), Rat(1));
    for (int j = 0; j < n; ++j)
        for (ElemId x : columns[static_cast<size_t>(j)])
            lp.rows[static_cast<size_t>(x)][static_cast<size_t>(j)] = 1;
    return lp;
}

// Deterministic greedy cover of the positively bounded elements; guarantees
// a feasible restricted master.
std::vector<TotalIndependentSet> greedy_cover(const Graph& g, const std::vector<Rat>& bounds) {
    int n = total_element_count(g);
    std::vector<TotalIndependentSet> cols;
    std::vector<char> uncovered(static_cast<size_t>(n), 0);
    int left = 0;
    for (int x = 0; x < n; ++x)
        if (bounds[static_cast<size_t>(x)] > 0) { uncovered[static_cast<size_t>(x)] = 1; ++left; }
    while (left > 0) {
        std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
        for (int x = 0; x < n; ++x)
            if (uncovered[static_cast<size_t>(x)]) w[static_cast<size_t>(x)] = 1;
        MaxWeightResult r = max_weight_tis(g, w);
        cols.push_back(r.set);
        for (ElemId x : r.set)
            if (uncovered[static_cast<size_t>(x)]) { uncovered[static_cast<size_t>(x)] = 0; --left; }
    }
    return cols;
}

struct CoverSolution {
    Rat value;
    WeightedColoring coloring;
    LPCertificate cert;
    std::vector<TotalIndependentSet> columns;
};

// Exact minimum-mass covering of the bounds over all total independent
// sets, by full enumeration of maximal sets or by column generation with the
// exact pricing oracle (optimal once the best price is <= 1).
CoverSolution solve_cover(const Graph& g, const std::vector<Rat>& bounds, ChiMode mode,
                          int enumeration_budget) {
    CoverSolution out;
    if (mode == ChiMode::enumerate) {
        out.columns = enumerate_maximal_tis(g, enumeration_budget);
        out.cert = simplex_solve(covering_lp(out.columns, bounds));
    } else {
        out.columns = greedy_cover(g, bounds);
        for (;;) {
            out.cert = simplex_solve(covering_lp(out.columns, bounds));
            MaxWeightResult price = max_weight_tis(g, out.cert.dual);
            if (price.weight <= 1) break;
            out.columns.push_back(price.set);
        }
    }
    out.value = out.cert.value;
    out.coloring = WeightedColoring(g);
    for (size_t j = 0; j < out.columns.size(); ++j)
        out.coloring.add(out.columns[j], out.cert.primal[j]);
    return out;
}

}  // namespace

ChiResult fractional_total_chromatic_number(const Graph& g, ChiMode mode,
                                            int enumeration_budget) {
    std::vector<Rat> ones(static_cast<size_t>(total_element_count(g)), Rat(1));
    CoverSolution s = solve_cover(g, ones, mode, enumeration_budget);
    return {s.value, s.coloring, s.cert, s.columns};
}

std::variant<WeightedColoring, CoverageInfeasible> solve_weighted_coloring(
    const Graph& g, const std::vector<Rat>& bounds, ChiMode mode, int enumeration_budget) {
    if (static_cast<int>(bounds.size()) != total_element_count(g))
        throw std::invalid_argument("bounds size mismatch");
    for (auto& b : bounds)
        if (b < 0) throw std::invalid_argument("bounds must be nonnegative");
    bool all_zero = std::all_of(bounds.begin(), bounds.end(), [](const Rat& b) { return b == 0; });
    if (all_zero) {
        WeightedColoring w(g);
        w.add(max_weight_tis(g, bounds).set, Rat(1));
        return w;
    }
    CoverSolution s = solve_cover(g, bounds, mode, enumeration_budget);
    if (s.value > 1) {
        // Any coloring meeting the bounds needs mass >= s.value > 1; the dual
        // vector proves it over every total independent set.
        return CoverageInfeasible{s.value, s.cert.dual};
    }
    WeightedColoring w = s.coloring;
    if (s.value < 1) {
        // Pad with an arbitrary maximal set: extra mass only raises coverage.
        std::vector<Rat> zeros(static_cast<size_t>(total_element_count(g)), Rat(0));
        w.add(max_weight_tis(g, zeros).set, 1 - s.value);
    }
    return w;
}

WeightedColoring weighted_to_fractional(const WeightedColoring& w, const Rat& alpha) {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    if (w.mass() != 1) throw std::invalid_argument("weighted coloring must have mass 1");
    std::vector<Rat> cov = w.coverage_vector();
    for (auto& c : cov)
        if (c < alpha) throw std::invalid_argument("coverage below alpha");
    WeightedColoring out = w;
    out.scale(1 / alpha);
    return out;
}

// ------------------------------------------------------- interval colorings

IntervalColoring weights_to_interval_assignment(const Graph& g, const WeightedColoring& w,
                                                const Rat& ambient) {
    if (w.mass() > ambient)
        throw std::invalid_argument("total mass exceeds the ambient band");
    std::vector<Rat> cov = w.coverage_vector();
    for (auto& c : cov)
        if (c < 1) throw std::invalid_argument("coverage below 1");
    IntervalColoring out;
    out.ambient = ambient;
    out.colors.assign(static_cast<size_t>(total_element_count(g)), IntervalSet());
    Rat offset = 0;
    for (auto& [set, weight] : w.support()) {
        IntervalSet band(offset, offset + weight);
        for (ElemId x : set)
            out.colors[static_cast<size_t>(x)] = out.colors[static_cast<size_t>(x)].unite(band);
        offset += weight;
    }
    return out;
}

VerifyReport verify_interval_coloring(const Graph& g, const IntervalColoring& c) {
    VerifyReport rep;
    int n = total_element_count(g);
    IntervalSet band(Rat(0), c.ambient);
    if (static_cast<int>(c.colors.size()) != n) {
        rep.violations.push_back({ViolationKind::missing, -1, -1, "color table size mismatch"});
        return rep;
    }
    for (int x = 0; x < n; ++x) {
        const IntervalSet& s = c.color(x);
        if (s.empty()) {
            rep.violations.push_back({ViolationKind::missing, x, -1, elem_str(g, x) + " has no color set"});
            continue;
        }
        if (!band.contains(s))
            rep.violations.push_back({ViolationKind::outside_ambient, x, -1,
                                      elem_str(g, x) + " leaves [0, " + rat_str(c.ambient) + ")"});
        if (s.measure() < 1)
            rep.violations.push_back({ViolationKind::low_measure, x, -1,
                                      elem_str(g, x) + " has measure " + rat_str(s.measure())});
    }
    auto check_pair = [&](ElemId a, ElemId b) {
        if (!c.color(a).disjoint_from(c.color(b)))
            rep.violations.push_back({ViolationKind::overlap, a, b,
                                      elem_str(g, a) + " meets " + elem_str(g, b)});
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        check_pair(vertex_elem(g, g.edge(e).u), vertex_elem(g, g.edge(e).v));
        check_pair(vertex_elem(g, g.edge(e).u), edge_elem(g, e));
        check_pair(vertex_elem(g, g.edge(e).v), edge_elem(g, e));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                check_pair(edge_elem(g, inc[i].second), edge_elem(g, inc[j].second));
    }
    return rep;
}

std::vector<std::string> verify_weighted_coloring(const Graph& g, const WeightedColoring& w,
                                                  const std::vector<Rat>& bounds,
                                                  const Rat& mass) {
    std::vector<std::string> errs;
    if (!w.valid_support()) errs.push_back("support contains an invalid total independent set");
    if (w.mass() != mass)
        errs.push_back("total mass " + rat_str(w.mass()) + " != " + rat_str(mass));
    std::vector<Rat> cov = w.coverage_vector();
    for (int x = 0; x < total_element_count(g); ++x) {
        if (cov[static_cast<size_t>(x)] < bounds[static_cast<size_t>(x)])
            errs.push_back(elem_str(g, x) + " coverage " + rat_str(cov[static_cast<size_t>(x)]) +
                           " below " + rat_str(bounds[static_cast<size_t>(x)]));
    }
    return errs;
}

}  // namespace ftc

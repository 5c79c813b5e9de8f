#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/interval.hpp"
#include "ftc/rational.hpp"
#include "ftc/total.hpp"

namespace ftc {

// ------------------------------------------------------------ exact simplex

enum class Sense { LE, EQ, GE };

// minimize c.x subject to A x {<=,=,>=} b, x >= 0, all data rational.
struct LinearProgram {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::vector<Sense> sense;
    std::vector<Rat> objective;
};

enum class LPStatus { optimal, infeasible, unbounded };

// Exact primal certificate. For optimal: primal and dual are feasible and
// their objectives agree (strong duality, validated on construction). For
// infeasible: dual is a Farkas vector (y.b > 0, y.A_j <= 0, row signs
// respected).
struct LPCertificate {
    LPStatus status = LPStatus::optimal;
    Rat value;
    std::vector<Rat> primal;
    std::vector<Rat> dual;
};

LPCertificate simplex_solve(const LinearProgram& lp);

// Exact re-check of a certificate against the program; returns an empty
// string on success and a description of the first failure otherwise.
std::string check_certificate(const LinearProgram& lp, const LPCertificate& cert);

// -------------------------------------------------------- weighted colorings

// Finitely supported map from total independent sets to nonnegative weights.
class WeightedColoring {
public:
    WeightedColoring() = default;
    explicit WeightedColoring(const Graph& g) : host_(&g) {}

    const Graph& host() const { return *host_; }
    const std::vector<std::pair<TotalIndependentSet, Rat>>& support() const { return support_; }

    void add(const TotalIndependentSet& set, const Rat& w);  // merges equal sets
    void scale(const Rat& f);

    Rat mass() const;
    Rat coverage(ElemId x) const;
    std::vector<Rat> coverage_vector() const;
    // Support sets are valid total independent sets, weights nonnegative.
    bool valid_support() const;

private:
    const Graph* host_ = nullptr;
    std::vector<std::pair<TotalIndependentSet, Rat>> support_;  // sorted by set
};

enum class ChiMode { enumerate, column_generation };

struct ChiResult {
    Rat value;
    WeightedColoring coloring;  // mass = value, coverage >= 1 everywhere
    LPCertificate certificate;  // over the final column set
    std::vector<TotalIndependentSet> columns;
};

// Exact fractional total chromatic number with an optimal fractional
// coloring. Enumerate mode prices every maximal total independent set
// (subject to the enumeration budget); column generation starts from a
// greedy cover and adds violated sets priced by max_weight_tis until the
// best price drops to 1.
ChiResult fractional_total_chromatic_number(const Graph& g, ChiMode mode,
                                            int enumeration_budget = 40);

// Dual certificate that no weighted coloring meets the requested bounds:
// a feasible dual vector whose objective exceeds the unit of available mass.
struct CoverageInfeasible {
    Rat required_mass;       // optimal covering value, > 1
    std::vector<Rat> dual;   // per element
};

// Weighted total coloring with total mass exactly 1 and per-element coverage
// bounds, or a dual infeasibility certificate.
std::variant<WeightedColoring, CoverageInfeasible> solve_weighted_coloring(
    const Graph& g, const std::vector<Rat>& bounds, ChiMode mode = ChiMode::enumerate,
    int enumeration_budget = 40);

// Rescales a weighted alpha-total coloring (mass 1, coverage >= alpha) by
// 1/alpha into a fractional (1/alpha)-total coloring.
WeightedColoring weighted_to_fractional(const WeightedColoring& w, const Rat& alpha);

// -------------------------------------------------------- interval colorings

// Assignment of color sets inside [0, ambient) to every element.
struct IntervalColoring {
    Rat ambient;
    std::vector<IntervalSet> colors;  // indexed by ElemId

    const IntervalSet& color(ElemId x) const { return colors[static_cast<size_t>(x)]; }
};

// Stacks the support sets of a fractional coloring as consecutive intervals:
// every element receives the union of the bands of the sets containing it.
// Requires mass(w) <= ambient and coverage >= 1.
IntervalColoring weights_to_interval_assignment(const Graph& g, const WeightedColoring& w,
                                                const Rat& ambient);

enum class ViolationKind { missing, low_measure, outside_ambient, overlap };

struct Violation {
    ViolationKind kind;
    ElemId a = -1, b = -1;
    std::string detail;
};

struct VerifyReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Exact check: every element colored with measure >= 1 inside [0, ambient),
// and adjacent/incident elements have disjoint color sets.
VerifyReport verify_interval_coloring(const Graph& g, const IntervalColoring& c);

// Exact check of a weighted coloring against per-element coverage bounds
// and total mass exactly `mass`.
std::vector<std::string> verify_weighted_coloring(const Graph& g, const WeightedColoring& w,
                                                  const std::vector<Rat>& bounds,
                                                  const Rat& mass);

}  // namespace ftc

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ftc/rational.hpp"

namespace ftc {

// Half-open interval [lo, hi) with rational endpoints. Empty iff lo >= hi.
struct Interval {
    Rat lo, hi;
    Rat length() const { return hi - lo; }
    bool empty() const { return lo >= hi; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// Canonical finite union of disjoint, non-abutting half-open intervals.
// Canonical form makes set equality, disjointness and measure tests exact:
// measure-zero overlap can never occur, so "intersection empty" is the same
// test as "measurably disjoint".
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(const Rat& lo, const Rat& hi);                // single interval
    explicit IntervalSet(std::vector<Interval> raw);          // canonicalizes

    static IntervalSet empty_set() { return IntervalSet(); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    Rat measure() const;

    bool contains_point(const Rat& t) const;
    bool contains(const IntervalSet& other) const;  // superset test
    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

    IntervalSet unite(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet subtract(const IntervalSet& o) const;
    bool disjoint_from(const IntervalSet& o) const;

    // Translate the whole set by t.
    IntervalSet shifted(const Rat& t) const;

    // Leftmost subset of exactly the given measure; throws if measure(this)
    // is smaller.
    IntervalSet take_prefix(const Rat& want) const;

private:
    std::vector<Interval> parts_;
    void canonicalize();
};

// One translated piece of a piecewise isometry: [src.lo, src.hi) -> +offset.
struct IsoPiece {
    Interval src;
    Rat offset;
    Interval image() const { return {src.lo + offset, src.hi + offset}; }
    bool operator==(const IsoPiece& o) const { return src == o.src && offset == o.offset; }
};

// Measure-preserving piecewise translation defined on an arbitrary interval
// set (its domain), mapping bijectively onto its image. Pieces are kept
// canonical: sorted by source, maximal (adjacent pieces with equal offset
// merged), sources disjoint, images disjoint.
class PartialIsometry {
public:
    PartialIsometry() = default;
    explicit PartialIsometry(std::vector<IsoPiece> pieces);

    static PartialIsometry identity_on(const IntervalSet& s);

    const std::vector<IsoPiece>& pieces() const { return pieces_; }
    IntervalSet domain() const;
    IntervalSet image() const;

    Rat map_point(const Rat& t) const;              // throws outside domain
    IntervalSet apply(const IntervalSet& a) const;  // requires a within domain
    PartialIsometry inverted() const;
    PartialIsometry restricted(const IntervalSet& dom) const;
    // Piecewise union of two maps with disjoint domains and disjoint images.
    PartialIsometry merged_with(const PartialIsometry& other) const;

    bool operator==(const PartialIsometry& o) const { return pieces_ == o.pieces_; }

private:
    std::vector<IsoPiece> pieces_;
    void canonicalize();
};

// Bijective piecewise translation of the whole ambient band [0, L): sources
// tile [0, L) with no gaps and images tile [0, L) as well. Construction
// validates both tilings.
class PiecewiseIsometry {
public:
    PiecewiseIsometry() : PiecewiseIsometry(Rat(1)) {}  // identity on [0, 1)
    explicit PiecewiseIsometry(const Rat& ambient);     // identity on [0, ambient)
    PiecewiseIsometry(const Rat& ambient, std::vector<IsoPiece> pieces);

    const Rat& ambient() const { return ambient_; }
    const std::vector<IsoPiece>& pieces() const { return map_.pieces(); }
    const PartialIsometry& as_partial() const { return map_; }

    Rat map_point(const Rat& t) const { return map_.map_point(t); }
    IntervalSet apply(const IntervalSet& a) const;
    PiecewiseIsometry inverted() const;
    PartialIsometry restricted(const IntervalSet& dom) const { return map_.restricted(dom); }

    bool operator==(const PiecewiseIsometry& o) const {
        return ambient_ == o.ambient_ && map_ == o.map_;
    }

private:
    Rat ambient_;
    PartialIsometry map_;
    void validate() const;
};

// f after g: (compose(f, g))(t) = f(g(t)). Ambients must match.
PiecewiseIsometry compose(const PiecewiseIsometry& f, const PiecewiseIsometry& g);

// Partition of [0, L) into the band [L_prime, L) at index 0 and blocks of
// measure delta covering [0, L_prime), the last block possibly shorter:
// result[k] = [(k-1)*delta, min(k*delta, L_prime)) for k = 1..s with
// s = ceil(L_prime/delta), result[0] = [L_prime, L).
std::vector<IntervalSet> build_level_partition(const Rat& l_prime, const Rat& l,
                                               const Rat& delta);

// Measure-preserving bijection src -> dst built greedily left to right with
// interval splitting ("zipper"). With fix_overlap, every point of the
// intersection src /\ dst maps to itself and only the residues are zipped.
// Throws when the measures differ.
PartialIsometry matching_isometry(const IntervalSet& src, const IntervalSet& dst,
                                  bool fix_overlap);

// Extends a partial swap to the whole ambient band on top of `base`:
// applies sigma where base lands in sigma's domain S, sigma^-1 where base
// lands in image(sigma) \ S, and base elsewhere. Requires sigma to map
// S /\ image(sigma) onto itself (it always does for matching_isometry with
// fix_overlap), otherwise the result would not be a bijection.
PiecewiseIsometry extend_swap(const PiecewiseIsometry& base, const PartialIsometry& sigma);

}  // namespace ftc

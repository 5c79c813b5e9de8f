#include "ftc/interval.hpp"

#include <algorithm>
#include <cassert>

namespace ftc {

// ---------------------------------------------------------------- IntervalSet

IntervalSet::IntervalSet(const Rat& lo, const Rat& hi) {
    if (lo < hi) parts_.push_back({lo, hi});
}

IntervalSet::IntervalSet(std::vector<Interval> raw) : parts_(std::move(raw)) {
    canonicalize();
}

void IntervalSet::canonicalize() {
    std::erase_if(parts_, [](const Interval& iv) { return iv.empty(); });
    std::sort(parts_.begin(), parts_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    for (auto& iv : parts_) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (iv.hi > out.back().hi) out.back().hi = iv.hi;
        } else {
            out.push_back(iv);
        }
    }
    parts_ = std::move(out);
}

Rat IntervalSet::measure() const {
    Rat m = 0;
    for (auto& iv : parts_) m += iv.length();
    return m;
}

bool IntervalSet::contains_point(const Rat& t) const {
    for (auto& iv : parts_) {
        if (t < iv.lo) return false;
        if (t < iv.hi) return true;
    }
    return false;
}

bool IntervalSet::contains(const IntervalSet& other) const {
    return other.subtract(*this).empty();
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    std::vector<Interval> out;
    size_t i = 0, j = 0;
    while (i < parts_.size() && j < o.parts_.size()) {
        const Interval& a = parts_[i];
        const Interval& b = o.parts_[j];
        Rat lo = rat_max(a.lo, b.lo), hi = rat_min(a.hi, b.hi);
        if (lo < hi) out.push_back({lo, hi});
        if (a.hi <= b.hi) ++i; else ++j;
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
    std::vector<Interval> out;
    size_t j = 0;
    for (auto& a : parts_) {
        Rat cur = a.lo;
        while (j < o.parts_.size() && o.parts_[j].hi <= cur) ++j;
        size_t k = j;
        while (k < o.parts_.size() && o.parts_[k].lo < a.hi) {
            if (o.parts_[k].lo > cur) out.push_back({cur, o.parts_[k].lo});
            cur = rat_max(cur, o.parts_[k].hi);
            if (cur >= a.hi) break;
            ++k;
        }
        if (cur < a.hi) out.push_back({cur, a.hi});
    }
    return IntervalSet(std::move(out));
}

bool IntervalSet::disjoint_from(const IntervalSet& o) const {
    return intersect(o).empty();
}

IntervalSet IntervalSet::shifted(const Rat& t) const {
    std::vector<Interval> out = parts_;
    for (auto& iv : out) { iv.lo += t; iv.hi += t; }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::take_prefix(const Rat& want) const {
    if (want < 0) throw std::invalid_argument("take_prefix: negative measure");
    std::vector<Interval> out;
    Rat left = want;
    for (auto& iv : parts_) {
        if (left == 0) break;
        Rat len = iv.length();
        if (len <= left) {
            out.push_back(iv);
            left -= len;
        } else {
            out.push_back({iv.lo, iv.lo + left});
            left = 0;
        }
    }
    if (left > 0) throw std::invalid_argument("take_prefix: set too small");
    return IntervalSet(std::move(out));
}

// ------------------------------------------------------------ PartialIsometry

PartialIsometry::PartialIsometry(std::vector<IsoPiece> pieces) : pieces_(std::move(pieces)) {
    canonicalize();
}

void PartialIsometry::canonicalize() {
    std::erase_if(pieces_, [](const IsoPiece& p) { return p.src.empty(); });
    std::sort(pieces_.begin(), pieces_.end(), [](const IsoPiece& a, const IsoPiece& b) {
        return a.src.lo < b.src.lo;
    });
    std::vector<IsoPiece> out;
    for (auto& p : pieces_) {
        if (!out.empty()) {
            if (p.src.lo < out.back().src.hi)
                throw std::invalid_argument("isometry pieces overlap in source");
            if (p.src.lo == out.back().src.hi && p.offset == out.back().offset) {
                out.back().src.hi = p.src.hi;
                continue;
            }
        }
        out.push_back(p);
    }
    pieces_ = std::move(out);
    // Images must be pairwise disjoint for the map to be injective.
    IntervalSet img;
    Rat want = 0;
    for (auto& p : pieces_) {
        img = img.unite(IntervalSet(p.image().lo, p.image().hi));
        want += p.src.length();
    }
    if (img.measure() != want)
        throw std::invalid_argument("isometry pieces overlap in image");
}

PartialIsometry PartialIsometry::identity_on(const IntervalSet& s) {
    std::vector<IsoPiece> ps;
    for (auto& iv : s.parts()) ps.push_back({iv, Rat(0)});
    return PartialIsometry(std::move(ps));
}

IntervalSet PartialIsometry::domain() const {
    std::vector<Interval> ivs;
    for (auto& p : pieces_) ivs.push_back(p.src);
    return IntervalSet(std::move(ivs));
}

IntervalSet PartialIsometry::image() const {
    std::vector<Interval> ivs;
    for (auto& p : pieces_) ivs.push_back(p.image());
    return IntervalSet(std::move(ivs));
}

Rat PartialIsometry::map_point(const Rat& t) const {
    for (auto& p : pieces_)
        if (t >= p.src.lo && t < p.src.hi) return t + p.offset;
    throw std::invalid_argument("map_point: outside domain");
}

IntervalSet PartialIsometry::apply(const IntervalSet& a) const {
    IntervalSet covered;
    std::vector<Interval> out;
    for (auto& p : pieces_) {
        IntervalSet part = a.intersect(IntervalSet(p.src.lo, p.src.hi));
        for (auto& iv : part.parts()) out.push_back({iv.lo + p.offset, iv.hi + p.offset});
        covered = covered.unite(part);
    }
    if (!(covered == a))
        throw std::invalid_argument("apply: set not contained in the isometry domain");
    return IntervalSet(std::move(out));
}

PartialIsometry PartialIsometry::inverted() const {
    std::vector<IsoPiece> ps;
    for (auto& p : pieces_) ps.push_back({p.image(), -p.offset});
    return PartialIsometry(std::move(ps));
}

PartialIsometry PartialIsometry::restricted(const IntervalSet& dom) const {
    std::vector<IsoPiece> ps;
    for (auto& p : pieces_) {
        IntervalSet part = dom.intersect(IntervalSet(p.src.lo, p.src.hi));
        for (auto& iv : part.parts()) ps.push_back({iv, p.offset});
    }
    PartialIsometry r(std::move(ps));
    if (!(r.domain() == dom))
        throw std::invalid_argument("restricted: requested domain not covered");
    return r;
}

PartialIsometry PartialIsometry::merged_with(const PartialIsometry& other) const {
    std::vector<IsoPiece> ps = pieces_;
    ps.insert(ps.end(), other.pieces_.begin(), other.pieces_.end());
    return PartialIsometry(std::move(ps));  // ctor re-checks disjointness
}

// ---------------------------------------------------------- PiecewiseIsometry

PiecewiseIsometry::PiecewiseIsometry(const Rat& ambient) : ambient_(ambient) {
    if (ambient <= 0) throw std::invalid_argument("ambient must be positive");
    map_ = PartialIsometry::identity_on(IntervalSet(Rat(0), ambient));
}

PiecewiseIsometry::PiecewiseIsometry(const Rat& ambient, std::vector<IsoPiece> pieces)
    : ambient_(ambient), map_(std::move(pieces)) {
    validate();
}

void PiecewiseIsometry::validate() const {
    IntervalSet full(Rat(0), ambient_);
    if (!(map_.domain() == full))
        throw std::invalid_argument("isometry sources do not tile the ambient band");
    if (!(map_.image() == full))
        throw std::invalid_argument("isometry images do not tile the ambient band");
}

IntervalSet PiecewiseIsometry::apply(const IntervalSet& a) const { return map_.apply(a); }

PiecewiseIsometry PiecewiseIsometry::inverted() const {
    PartialIsometry inv = map_.inverted();
    return PiecewiseIsometry(ambient_, inv.pieces());
}

PiecewiseIsometry compose(const PiecewiseIsometry& f, const PiecewiseIsometry& g) {
    if (f.ambient() != g.ambient())
        throw std::invalid_argument("compose: ambient mismatch");
    std::vector<IsoPiece> out;
    for (const IsoPiece& gp : g.pieces()) {
        Interval mid = gp.image();
        for (const IsoPiece& fp : f.pieces()) {
            Rat lo = rat_max(mid.lo, fp.src.lo), hi = rat_min(mid.hi, fp.src.hi);
            if (lo < hi)
                out.push_back({{lo - gp.offset, hi - gp.offset}, gp.offset + fp.offset});
        }
    }
    return PiecewiseIsometry(f.ambient(), std::move(out));
}

// -------------------------------------------------------------- constructions

std::vector<IntervalSet> build_level_partition(const Rat& l_prime, const Rat& l,
                                               const Rat& delta) {
    if (!(0 < l_prime && l_prime < l)) throw std::invalid_argument("need 0 < L' < L");
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    long s = rat_ceil(l_prime / delta);
    std::vector<IntervalSet> blocks(static_cast<size_t>(s) + 1);
    blocks[0] = IntervalSet(l_prime, l);
    for (long k = 1; k <= s; ++k) {
        Rat lo = delta * (k - 1);
        Rat hi = rat_min(delta * k, l_prime);
        blocks[static_cast<size_t>(k)] = IntervalSet(lo, hi);
    }
    return blocks;
}

namespace {

// Zips src onto dst in increasing order, splitting at the shorter piece.
void zip_pieces(const IntervalSet& src, const IntervalSet& dst, std::vector<IsoPiece>& out) {
    size_t i = 0, j = 0;
    Rat spos, dpos;
    bool fresh_s = true, fresh_d = true;
    while (i < src.parts().size() && j < dst.parts().size()) {
        const Interval& a = src.parts()[i];
        const Interval& b = dst.parts()[j];
        if (fresh_s) { spos = a.lo; fresh_s = false; }
        if (fresh_d) { dpos = b.lo; fresh_d = false; }
        Rat len = rat_min(a.hi - spos, b.hi - dpos);
        out.push_back({{spos, spos + len}, dpos - spos});
        spos += len; dpos += len;
        if (spos == a.hi) { ++i; fresh_s = true; }
        if (dpos == b.hi) { ++j; fresh_d = true; }
    }
}

}  // namespace

PartialIsometry matching_isometry(const IntervalSet& src, const IntervalSet& dst,
                                  bool fix_overlap) {
    if (src.measure() != dst.measure())
        throw std::invalid_argument("matching_isometry: measures differ");
    std::vector<IsoPiece> out;
    if (fix_overlap) {
        IntervalSet ov = src.intersect(dst);
        for (auto& iv : ov.parts()) out.push_back({iv, Rat(0)});
        zip_pieces(src.subtract(ov), dst.subtract(ov), out);
    } else {
        zip_pieces(src, dst, out);
    }
    return PartialIsometry(std::move(out));
}

PiecewiseIsometry extend_swap(const PiecewiseIsometry& base, const PartialIsometry& sigma) {
    IntervalSet s = sigma.domain(), t = sigma.image();
    IntervalSet overlap = s.intersect(t);
    if (!(sigma.apply(overlap) == overlap))
        throw std::invalid_argument("extend_swap: sigma must map the domain/image overlap onto itself");
    // The swap on S u T: sigma on S, sigma^-1 on T \ S; identity elsewhere.
    PartialIsometry back = sigma.inverted().restricted(t.subtract(s));
    PartialIsometry swap = sigma.merged_with(back);
    IntervalSet rest = IntervalSet(Rat(0), base.ambient()).subtract(s.unite(t));
    PartialIsometry full = swap.merged_with(PartialIsometry::identity_on(rest));
    return compose(PiecewiseIsometry(base.ambient(), full.pieces()), base);
}

}  // namespace ftc

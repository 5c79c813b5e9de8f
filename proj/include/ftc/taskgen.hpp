#pragma once

#include <cstdint>
#include <random>

#include "ftc/construct.hpp"

namespace ftc {

// Deterministic helpers built on the fully specified mt19937_64 engine, so
// identical seeds give identical artifacts on every platform.
struct TaskRng {
    std::mt19937_64 engine;
    explicit TaskRng(uint64_t seed) : engine(seed) {}
    uint64_t below(uint64_t n) { return n ? engine() % n : 0; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }
    // Rational in (0, 1] with the given denominator granularity.
    Rat unit(int denominator) { return Rat(range(1, denominator)) / denominator; }
};

// Random tree of the exact requested depth with maximum degree <= delta,
// grown from a spine path plus random branches, capped in size.
Graph random_tree(TaskRng& rng, int delta, int depth, int max_vertices = 220);

// Proper total coloring of a tree with delta+1 integer colors, returned as
// unit intervals [c, c+1). Valid whenever the tree's maximum degree is at
// most delta.
IntervalColoring greedy_tree_total_coloring(const Graph& tree, int delta, const Rat& ambient);

// Random canonical interval set of exactly the target measure inside
// [0, ambient) \ avoid, built from up to `pieces` random chunks.
IntervalSet random_measure_set(TaskRng& rng, const Rat& ambient, const IntervalSet& avoid,
                               const Rat& target, int pieces = 3, int granularity = 48);

// Full random recoloring task: random tree of depth 2s+1, greedy base
// coloring, random disjoint unit-measure targets.
RecolorTask random_recolor_task(uint64_t seed, int delta, const Rat& eps, const Rat& eps_prime);

}  // namespace ftc

#pragma once

#include <vector>

#include "cospec/graph.hpp"
#include "cospec/numeric.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

enum class CreationStep { Isolated, Dominating };

// Realizes a threshold graph by left-to-right vertex addition; vertex 1 is
// untyped, steps describe vertices 2..n.
struct CreationSequence {
    std::vector<CreationStep> steps;
    int order() const { return static_cast<int>(steps.size()) + 1; }
};

Graph realize_threshold(const CreationSequence& seq);

// Recognition by reverse peeling: repeatedly remove an isolated or
// dominating vertex until a single vertex remains.
bool is_threshold(const Graph& g);

// One representative per unlabeled threshold graph of order n, deduped by
// canonical label, deterministic order.
std::vector<Graph> enumerate_threshold(int n);

// True iff adjacency charpolys over enumerate_threshold(n) are pairwise
// distinct. Any false is an implementation bug, not a finding.
bool check_lazzarin(int n, int budget = 12);

struct QMateStats {
    long total = 0;
    long with_mate = 0;
    Rational fraction{0};
    // Q-charpoly collision classes (indices into enumerate_threshold(n)).
    std::vector<std::vector<int>> classes;
};

// Fraction of order-n threshold graphs whose signless-Laplacian charpoly
// collides with a non-isomorphic threshold graph of the same order.
QMateStats q_mate_fraction(int n, int budget = 12);

}  // namespace cospec

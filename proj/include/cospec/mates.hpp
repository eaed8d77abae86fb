#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cospec/cotree.hpp"
#include "cospec/graph.hpp"
#include "cospec/numeric.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

struct CollisionClass {
    std::string fingerprint;           // exact GenSpectrum key
    std::vector<std::string> members;  // graph6, pairwise non-isomorphic
    std::vector<bool> is_cograph;
};

struct CollisionReport {
    SpectrumKind kind = SpectrumKind::Adjacency;
    long corpus_size = 0;
    std::vector<CollisionClass> classes;  // sorted by fingerprint
};

// Groups a corpus of same-order graphs by exact GenSpectrum. Isomorphic
// duplicates collapse; singleton classes are dropped.
CollisionReport find_collision_classes(const std::vector<Graph>& corpus, SpectrumKind kind);

// Replayable graph stream: invoking the source runs the sink over the whole
// corpus in a fixed order. Collision search over a stream runs two passes
// (128-bit digests, then exact polynomials on digest-colliding candidates).
using GraphSource = std::function<void(const std::function<void(const Graph&)>&)>;

CollisionReport find_collision_classes_stream(const GraphSource& source, SpectrumKind kind);

// The order-9 seed of the mate construction: L is the unique-up-to-complement
// non-DGS cograph of order 9, R its non-cograph generalized cospectral mate,
// Tstar the cotree of L.
struct BasePair {
    Graph L{1};
    Graph R{1};
    Cotree Tstar;
};

// Runs the exhaustive order-9 search over an externally supplied corpus of
// all graphs of order 9 (validated against the Burnside count).
BasePair discover_base_pair(const std::vector<Graph>& all_order9,
                            CollisionReport* report_out = nullptr);
BasePair discover_base_pair_file(const std::string& corpus_path,
                                 CollisionReport* report_out = nullptr);

// Cache: two graph6 lines (L, R) plus one canonical cotree line (Tstar).
void save_base_pair(const BasePair& bp, const std::string& path);
BasePair load_base_pair(const std::string& path);

// Mate construction: substitute the star carrying R at the occurrence of
// Tstar inside t. The result is generalized cospectral with realize(t)
// and not isomorphic to it (it contains an induced P4).
Graph construct_mate(const Cotree& t, const BasePair& base);

// Union/join stability check: with g1, g2 generalized cospectral, both g1 u h vs
// g2 u h and g1 v h vs g2 v h must be generalized cospectral.
bool verify_union_join(const Graph& g1, const Graph& g2, const Graph& h);

struct DgsSurvey {
    BigCount total = 0;
    long with_mate_in_family = 0;
    CollisionReport report;
};

// Counts cographs of order n having a generalized cospectral mate within the
// cograph family (exhaustive streaming over all cotrees of order n).
DgsSurvey dgs_survey(int n, SpectrumKind kind, int budget = 16);

// Random cotree of size <= max_size containing pattern as a labeled subtree;
// used by the mate-construction property suites.
Cotree random_cotree_containing(const Cotree& pattern, int max_size, std::mt19937_64& rng);

}  // namespace cospec

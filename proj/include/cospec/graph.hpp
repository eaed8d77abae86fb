#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cospec/errors.hpp"

namespace cospec {

inline constexpr int kMaxOrder = 62;           // graph6 short form
inline constexpr int kCanonicalMaxOrder = 20;  // canonical-label ceiling

// Simple undirected graph on vertices 0..n-1, adjacency packed one bitset row
// per vertex. No self-loops; rows stay symmetric by construction.
class Graph {
public:
    explicit Graph(int order) : n_(order), rows_(check_order(order), 0) {}

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }

    void set_edge(int u, int v, bool present = true) {
        if (u == v) throw Error("self-loops are not allowed");
        std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
        if (present) {
            rows_[u] |= bv;
            rows_[v] |= bu;
        } else {
            rows_[u] &= ~bv;
            rows_[v] &= ~bu;
        }
    }

    // Neighbor bitset of v (bits 0..n-1).
    std::uint64_t neighbors(int v) const { return rows_[v]; }

    int degree(int v) const;
    long edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int order) {
        if (order < 1 || order > kMaxOrder)
            throw OrderOutOfRange("graph order must be in 1.." +
                                  std::to_string(kMaxOrder) + ", got " +
                                  std::to_string(order));
        return order;
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

// graph6 short-form codec, bit-exact: byte n+63, then ceil(n(n-1)/2 / 6)
// bytes covering the upper triangle column by column, 6 bits per byte,
// MSB first, +63 offset.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// True iff some 4-subset induces a path on 4 vertices.
bool induced_p4_exists(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Total-order key over isomorphism classes: the graph6 string of the
// canonically relabeled graph. Equal keys iff isomorphic.
struct CanonicalLabel {
    std::string bytes;
    auto operator<=>(const CanonicalLabel&) const = default;
};

CanonicalLabel canonical_label(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

// Small builders used throughout tests and tools.
Graph single_vertex();
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center is vertex 0

}  // namespace cospec

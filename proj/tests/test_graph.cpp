#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cospec/graph.hpp"

using namespace cospec;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) g.set_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.set_edge(perm[u], perm[v]);
    return out;
}

// brute-force isomorphism by permutation search; the independent oracle for
// canonical labels at tiny orders
bool iso_brute(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(g, perm) == h) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void for_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Graph g(n);
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if ((mask >> b) & 1) g.set_edge(u, v);
        fn(g);
    }
}

}  // namespace

TEST_CASE("graph6 codec basics") {
    CHECK(emit_graph6(single_vertex()) == "@");
    CHECK(parse_graph6("@").order() == 1);

    // K_2 hand-encoded: order byte 'A', one edge bit in the 6-bit group
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(parse_graph6("A_") == complete_graph(2));

    Graph p = parse_graph6("N]?GWWGAGP@FAMAM@F?");
    CHECK(p.order() == 15);
    CHECK(emit_graph6(p) == "N]?GWWGAGP@FAMAM@F?");

    Graph q = parse_graph6("Ns_??KF@oK?p@a@b_po");
    CHECK(q.order() == 15);
    CHECK(emit_graph6(q) == "Ns_??KF@oK?p@a@b_po");
}

TEST_CASE("graph6 round-trip is the identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(1 + int(rng() % 30), rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedEncoding);
    CHECK_THROWS_AS(parse_graph6("A"), MalformedEncoding);      // missing body
    CHECK_THROWS_AS(parse_graph6("A__"), MalformedEncoding);    // trailing byte
    CHECK_THROWS_AS(parse_graph6("A\x1f"), MalformedEncoding);  // byte below 63
    CHECK_THROWS_AS(parse_graph6("?"), OrderOutOfRange);        // order 0
    CHECK_THROWS_AS(parse_graph6("~??"), OrderOutOfRange);      // long form
    CHECK_THROWS_AS(Graph(0), OrderOutOfRange);
    CHECK_THROWS_AS(Graph(63), OrderOutOfRange);
}

TEST_CASE("complement involution, exhaustive to order 6") {
    for (int n = 1; n <= 6; ++n)
        for_all_graphs(n, [](const Graph& g) { CHECK(complement(complement(g)) == g); });
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    CHECK(complement(single_vertex()) == single_vertex());
}

TEST_CASE("complement of the star is K3 plus an isolated vertex") {
    Graph c = complement(star_graph(3));
    CHECK(c.edge_count() == 3);
    CHECK(c.degree(0) == 0);  // the old center
    CHECK(are_isomorphic(c, disjoint_union(complete_graph(3), single_vertex())));
}

TEST_CASE("disjoint union and join") {
    CHECK(disjoint_union(empty_graph(1), empty_graph(1)) == empty_graph(2));
    Graph g = disjoint_union(complete_graph(2), single_vertex());
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 1);

    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    CHECK(are_isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
    CHECK(are_isomorphic(join(single_vertex(), empty_graph(3)), star_graph(3)));
}

TEST_CASE("join equals the De Morgan construction") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(1 + int(rng() % 6), rng);
        Graph h = random_graph(1 + int(rng() % 6), rng);
        CHECK(join(g, h) == complement(disjoint_union(complement(g), complement(h))));
    }
}

TEST_CASE("induced P4 detection") {
    CHECK(induced_p4_exists(path_graph(4)));
    CHECK_FALSE(induced_p4_exists(cycle_graph(4)));
    CHECK_FALSE(induced_p4_exists(star_graph(3)));
    CHECK_FALSE(induced_p4_exists(complete_graph(5)));
    CHECK(induced_p4_exists(path_graph(5)));
    CHECK(induced_p4_exists(cycle_graph(5)));

    // P4-free is preserved by union and join of P4-free parts
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(induced_p4_exists(disjoint_union(c4, c4)));
    CHECK_FALSE(induced_p4_exists(join(c4, star_graph(2))));
}

TEST_CASE("canonical label examples") {
    Graph k3a = complete_graph(3);
    Graph k3b(3);
    k3b.set_edge(2, 0);
    k3b.set_edge(0, 1);
    k3b.set_edge(1, 2);
    CHECK(canonical_label(k3a) == canonical_label(k3b));

    CHECK(canonical_label(star_graph(3)) !=
          canonical_label(disjoint_union(complete_graph(3), single_vertex())));

    CHECK(canonical_label(parse_graph6("N]?GWWGAGP@FAMAM@F?")) !=
          canonical_label(parse_graph6("Ns_??KF@oK?p@a@b_po")));

    CHECK_THROWS_AS(canonical_label(Graph(21)), OrderOutOfRange);
}

TEST_CASE("canonical label is relabeling-invariant") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 7);
        Graph g = random_graph(n, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_label(g) == canonical_label(relabel(g, perm)));
    }
}

TEST_CASE("canonical label agrees with brute-force isomorphism, exhaustive n <= 5") {
    std::vector<Graph> reps;
    for (int n = 4; n <= 5; ++n)
        for_all_graphs(n, [&](const Graph& g) { reps.push_back(g); });
    // sample pairs of equal order; full cross-product is too large only at 5
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4000; ++trial) {
        const Graph& a = reps[rng() % reps.size()];
        const Graph& b = reps[rng() % reps.size()];
        if (a.order() != b.order()) continue;
        CHECK(are_isomorphic(a, b) == iso_brute(a, b));
    }
}

TEST_CASE("are_isomorphic examples") {
    Graph k22(4);
    k22.set_edge(0, 2);
    k22.set_edge(0, 3);
    k22.set_edge(1, 2);
    k22.set_edge(1, 3);
    CHECK(are_isomorphic(cycle_graph(4), k22));
    CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
    CHECK_FALSE(are_isomorphic(path_graph(3), path_graph(4)));

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(1 + int(rng() % 10), rng);
        CHECK(are_isomorphic(g, complement(complement(g))));
    }
}

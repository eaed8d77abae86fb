#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cospec/cotree.hpp"
#include "cospec/enumeration.hpp"
#include "cospec/genall.hpp"

using namespace cospec;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.set_edge(perm[u], perm[v]);
    return out;
}

// Independent oracle for realize: vertices are leaves in canonical order and
// u,v are adjacent iff their lowest common ancestor is labeled Join.
void collect_leaf_paths(const Hierarchy& h, TreePath& cur, std::vector<TreePath>& out) {
    if (h.leaf()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < h.children().size(); ++i) {
        cur.push_back(int(i));
        collect_leaf_paths(h.children()[i], cur, out);
        cur.pop_back();
    }
}

Graph realize_by_lca(const Cotree& t) {
    std::vector<TreePath> leaves;
    TreePath cur;
    collect_leaf_paths(t.hierarchy(), cur, leaves);
    Graph g(int(leaves.size()));
    for (std::size_t a = 0; a < leaves.size(); ++a)
        for (std::size_t b = a + 1; b < leaves.size(); ++b) {
            std::size_t d = 0;
            while (d < leaves[a].size() && d < leaves[b].size() &&
                   leaves[a][d] == leaves[b][d])
                ++d;
            if (label_at_depth(t.root_label(), int(d)) == NodeLabel::Join)
                g.set_edge(int(a), int(b));
        }
    return g;
}

}  // namespace

TEST_CASE("parse and canonical emission") {
    CHECK(canonical_form(parse_hierarchy("(. .)")) == "(. .)");
    CHECK(parse_hierarchy("(. .)").size() == 2);

    Cotree k2 = parse_cotree("J(. .)");
    CHECK(realize(k2) == complete_graph(2));

    QuasiCotree q = parse_quasi("U(. {A_})");
    CHECK(q.payload() == complete_graph(2));
    CHECK(are_isomorphic(realize_quasi(q),
                         disjoint_union(complete_graph(2), single_vertex())));

    // unordered children merge to one canonical text
    CHECK(canonical_form(parse_hierarchy("(. (. .))")) ==
          canonical_form(parse_hierarchy("((. .) .)")));
    CHECK(canonical_form(parse_hierarchy("(. . .)")) !=
          canonical_form(parse_hierarchy("(. (. .))")));

    // leaves come before internal children in canonical order
    CHECK(canonical_form(parse_hierarchy("((. .) .)")) == "(. (. .))");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_hierarchy("(."), SyntaxError);
    CHECK_THROWS_AS(parse_hierarchy("(.)"), UnaryInternalNode);
    CHECK_THROWS_AS(parse_hierarchy("(. .) x"), SyntaxError);
    CHECK_THROWS_AS(parse_hierarchy("()"), SyntaxError);
    CHECK_NOTHROW(parse_tree("U(. J(. .))"));                     // correct alternation
    CHECK_THROWS_AS(parse_tree("U(. U(. .))"), SyntaxError);      // broken alternation
    CHECK_THROWS_AS(parse_tree("J(. J(. .))"), SyntaxError);
    CHECK_THROWS_AS(parse_tree("U({A_} {A_})"), MultipleStarLeaves);
    CHECK_THROWS_AS(parse_tree("({A_} .)"), SyntaxError);         // star needs labels
    CHECK_THROWS_AS(parse_quasi("J(. .)"), StarAbsentWhenRequired);
    CHECK_THROWS_AS(parse_cotree("(. .)"), SyntaxError);          // missing root label
    CHECK_THROWS_AS(parse_tree("U(. (. .))"), SyntaxError);       // mixed labeling
}

TEST_CASE("realize basics") {
    CHECK(realize(parse_cotree("J(. .)")) == complete_graph(2));
    CHECK(realize(parse_cotree("U(. .)")) == empty_graph(2));
    CHECK(are_isomorphic(realize(parse_cotree("J(U(. .) U(. .))")), cycle_graph(4)));
    CHECK(realize(Cotree{}) == single_vertex());
}

TEST_CASE("realize agrees with the LCA rule and complements pair up, sizes <= 7") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_hierarchies(n, [&](const Hierarchy& h) {
            Cotree tu(h, NodeLabel::Union), tj(h, NodeLabel::Join);
            Graph gu = realize(tu), gj = realize(tj);
            CHECK(gu == realize_by_lca(tu));
            CHECK(gj == realize_by_lca(tj));
            // interchanging all labels realizes the complement, leaf for leaf
            if (n >= 2) CHECK(gj == complement(gu));
        });
    }
}

TEST_CASE("decompose basics") {
    CHECK_THROWS_AS(decompose(path_graph(4)), NotACograph);
    CHECK(canonical_form(decompose(star_graph(3))) == "J(. U(. . .))");
    CHECK(decompose(single_vertex()).size() == 1);

    CHECK_NOTHROW(decompose(parse_graph6("N]?GWWGAGP@FAMAM@F?")));
    CHECK_NOTHROW(decompose(parse_graph6("Ns_??KF@oK?p@a@b_po")));
}

TEST_CASE("decompose inverts realize on all cotrees of size <= 8") {
    for (int n = 1; n <= 8; ++n) {
        enumerate_cographs(n, [&](const Cotree& t) {
            Cotree back = decompose(realize(t));
            CHECK(canonical_form(back) == canonical_form(t));
        });
    }
}

TEST_CASE("decompose canonical form is invariant under relabeling, exhaustive n <= 7") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 7; ++n) {
        enumerate_cographs(n, [&](const Cotree& t) {
            Graph g = realize(t);
            std::string expect = canonical_form(decompose(g));
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            if (n <= 5) {
                do {
                    CHECK(canonical_form(decompose(relabel(g, perm))) == expect);
                } while (std::next_permutation(perm.begin(), perm.end()));
            } else {
                for (int k = 0; k < 24; ++k) {
                    std::shuffle(perm.begin(), perm.end(), rng);
                    CHECK(canonical_form(decompose(relabel(g, perm))) == expect);
                }
            }
        });
    }
}

TEST_CASE("cograph-hood equals P4-freeness, exhaustive n <= 7") {
    // decompose succeeds exactly on the P4-free graphs, over every
    // isomorphism class of order <= 7
    for (int n = 1; n <= 7; ++n) {
        long cographs_seen = 0;
        for (const auto& g6 : all_graphs_graph6(n)) {
            Graph g = parse_graph6(g6);
            bool p4 = induced_p4_exists(g);
            bool decomposed = true;
            try {
                Cotree t = decompose(g);
                CHECK(are_isomorphic(realize(t), g));
            } catch (const NotACograph&) {
                decomposed = false;
            }
            CHECK(decomposed == !p4);
            if (decomposed) ++cographs_seen;
        }
        CHECK(BigCount(cographs_seen) == count_cographs(n));
    }
}

TEST_CASE("complement_cotree and hierarchy_of") {
    Cotree t = parse_cotree("J(. .)");
    CHECK(canonical_form(complement_cotree(t)) == "U(. .)");
    CHECK(canonical_form(hierarchy_of(t)) == "(. .)");
    CHECK(hierarchy_of(complement_cotree(t)) == hierarchy_of(t));

    std::mt19937_64 rng(29);
    int done = 0;
    for (int n = 2; n <= 7 && done < 100; ++n) {
        enumerate_cographs(n, [&](const Cotree& c) {
            if (done >= 100) return;
            ++done;
            CHECK(complement_cotree(complement_cotree(c)) == c);
            CHECK(realize(complement_cotree(c)) == complement(realize(c)));
        });
    }
}

TEST_CASE("find_subhierarchy") {
    Hierarchy h = parse_hierarchy("(. (. .))");
    Hierarchy p = parse_hierarchy("(. .)");
    auto hit = find_subhierarchy(h, p);
    REQUIRE(hit.has_value());
    CHECK(canonical_form(h.at(*hit)) == "(. .)");

    CHECK_FALSE(find_subhierarchy(p, h).has_value());  // too small a haystack
    CHECK(find_subhierarchy(h, h).has_value());        // the root matches itself
    CHECK(find_subhierarchy(h, h)->empty());

    CHECK_THROWS_AS(find_subhierarchy(h, Hierarchy{}), PatternTooSmall);
}

TEST_CASE("find_labeled_subtree respects label parity") {
    Cotree t = parse_cotree("U(. J(. U(. .)))");
    CHECK(find_labeled_subtree(t, t)->empty());

    Cotree pu = parse_cotree("U(. .)");
    Cotree pj = parse_cotree("J(. .)");
    auto hu = find_labeled_subtree(t, pu);
    auto hj = find_labeled_subtree(t, pj);
    REQUIRE(hu.has_value());
    CHECK(hu->size() == 2);  // the U(. .) sits two levels down (even depth)
    CHECK(subtree_at(t, *hu) == pu);
    // no size-2 subtree sits at odd depth, so the J-rooted pattern is absent
    CHECK_FALSE(hj.has_value());

    // the same skeleton under the other root label finds the J pattern instead
    Cotree tc = complement_cotree(t);
    CHECK(find_labeled_subtree(tc, pj).has_value());
    CHECK_FALSE(find_labeled_subtree(tc, pu).has_value());
}

TEST_CASE("find_labeled_subtree parity property on enumerated cotrees") {
    Cotree pattern = parse_cotree("U(. .)");
    for (int n = 2; n <= 7; ++n) {
        enumerate_cographs(n, [&](const Cotree& t) {
            auto hit = find_labeled_subtree(t, pattern);
            if (hit) {
                // the found subtree really carries the pattern's label
                CHECK(subtree_at(t, *hit) == pattern);
                CHECK(label_at_depth(t.root_label(), int(hit->size())) ==
                      pattern.root_label());
            }
        });
    }
}

TEST_CASE("substitute_star and realize_quasi") {
    Cotree t = parse_cotree("J(. U(. . .))");  // the star K_{1,3}

    // substituting at the root gives the bare payload
    QuasiCotree bare = substitute_star(t, {}, path_graph(4));
    CHECK(bare.bare());
    CHECK(realize_quasi(bare) == path_graph(4));

    // substituting a leaf with K_1 leaves the realization unchanged
    QuasiCotree leaf_sub = substitute_star(t, {0}, single_vertex());
    CHECK(are_isomorphic(realize_quasi(leaf_sub), realize(t)));

    CHECK_THROWS_AS(substitute_star(t, {4}, single_vertex()), VertexNotFound);
    CHECK_THROWS_AS(substitute_star(t, {0, 0}, single_vertex()), VertexNotFound);
}

TEST_CASE("star expansion homomorphism on random cotrees") {
    std::mt19937_64 rng(31);
    std::vector<Cotree> pool;
    for (int n = 4; n <= 7; ++n)
        enumerate_cographs(n, [&](const Cotree& t) { pool.push_back(t); });

    for (int trial = 0; trial < 100; ++trial) {
        const Cotree& t = pool[rng() % pool.size()];
        // random vertex path
        TreePath u;
        const Hierarchy* cur = &t.hierarchy();
        while (!cur->leaf() && (rng() & 1)) {
            int i = int(rng() % cur->children().size());
            u.push_back(i);
            cur = &cur->children()[i];
        }
        Graph payload = realize(subtree_at(t, u));
        CHECK(are_isomorphic(realize_quasi(substitute_star(t, u, payload)), realize(t)));
    }
}

TEST_CASE("quasi-cotree text round-trips") {
    QuasiCotree q = parse_quasi("U(. {A_})");
    CHECK(parse_quasi(q.text()) == q);
    QuasiCotree bare = parse_quasi("{A_}");
    CHECK(bare.bare());
    CHECK(realize_quasi(bare) == complete_graph(2));
}

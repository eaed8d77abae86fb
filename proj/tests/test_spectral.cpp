#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cospec/enumeration.hpp"
#include "cospec/spectral.hpp"

using namespace cospec;

namespace {

// Independent oracle: det(xI - M) by cofactor expansion over polynomial
// entries, exact big integers. Exponential, fine for n <= 7.
using Poly = std::vector<BigCount>;  // ascending

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_add(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

Poly poly_scale(Poly a, const BigCount& c) {
    for (auto& x : a) x *= c;
    return a;
}

// matrix of polynomials, cofactor expansion along the first remaining row
Poly det_cofactor(std::vector<std::vector<Poly>> m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc{0};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][j], det_cofactor(std::move(minor)));
        if (j % 2) term = poly_scale(std::move(term), -1);
        acc = poly_add(std::move(acc), term);
    }
    return acc;
}

IntPolynomial charpoly_oracle(const SymMatrix& m) {
    std::size_t n = m.order();
    std::vector<std::vector<Poly>> xm(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                xm[i][j] = Poly{-m.at(i, j), 1};  // x - a_ii
            else
                xm[i][j] = Poly{-m.at(i, j)};
        }
    IntPolynomial p;
    p.coeffs = det_cofactor(std::move(xm));
    return p;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) g.set_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("charpoly basics") {
    IntPolynomial k2 = charpoly(adjacency_matrix(complete_graph(2)));
    CHECK(k2.coeffs == std::vector<BigCount>{-1, 0, 1});  // x^2 - 1

    IntPolynomial zero5 = charpoly(adjacency_matrix(empty_graph(5)));
    CHECK(zero5.degree() == 5);
    for (int i = 0; i < 5; ++i) CHECK(zero5.coeffs[i] == 0);
    CHECK(zero5.coeffs[5] == 1);  // x^5

    IntPolynomial p4 = charpoly(adjacency_matrix(path_graph(4)));
    CHECK(p4.coeffs == std::vector<BigCount>{1, 0, -3, 0, 1});  // x^4 - 3x^2 + 1
    CHECK(p4 == charpoly_oracle(adjacency_matrix(path_graph(4))));
}

TEST_CASE("charpoly agrees with the cofactor oracle on random symmetric matrices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 6);
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                std::int64_t v = std::int64_t(rng() % 7) - 3;
                m.at(i, j) = v;
                m.at(j, i) = v;
            }
        CHECK(charpoly(m) == charpoly_oracle(m));
    }
}

TEST_CASE("charpoly agrees with the oracle on Q matrices") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(1 + int(rng() % 6), rng);
        CHECK(charpoly(q_matrix(g)) == charpoly_oracle(q_matrix(g)));
    }
}

TEST_CASE("newton power sums recovered from coefficients match traces") {
    // p_k = trace(A^k) must satisfy Newton's identities against the e_k read
    // off the charpoly; exact integers throughout.
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + int(rng() % 17);  // covers both the int128 and big-int paths
        Graph g = random_graph(n, rng);
        IntPolynomial cp = charpoly(adjacency_matrix(g));
        // charpoly = sum_k (-1)^k e_k x^(n-k)
        std::vector<BigCount> e(n + 1);
        for (int k = 0; k <= n; ++k) {
            e[k] = cp.coeffs[n - k];
            if (k % 2) e[k] = -e[k];
        }
        int kmax = std::min(n, 6);
        std::vector<BigCount> ps(kmax + 1, 0);  // ps[k] = trace(A^k)
        std::vector<std::vector<BigCount>> pw(n, std::vector<BigCount>(n, 0));
        for (int i = 0; i < n; ++i) pw[i][i] = 1;
        for (int k = 1; k <= kmax; ++k) {
            std::vector<std::vector<BigCount>> nx(n, std::vector<BigCount>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (pw[i][l] == 0) continue;
                    for (int j = 0; j < n; ++j)
                        if (g.adjacent(l, j)) nx[i][j] += pw[i][l];
                }
            pw = std::move(nx);
            for (int i = 0; i < n; ++i) ps[k] += pw[i][i];
        }
        for (int k = 1; k <= kmax; ++k) {
            BigCount rhs = 0;
            for (int i = 1; i < k; ++i) {
                BigCount term = e[i] * ps[k - i];
                rhs += (i % 2) ? term : -term;
            }
            rhs += BigCount(k) * e[k] * ((k % 2) ? 1 : -1);
            CHECK(ps[k] == rhs);
        }
    }
}

TEST_CASE("multiplicativity under disjoint union") {
    // exhaustive over cograph pairs of small order, plus random to order 10
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(1 + int(rng() % 8), rng);
        Graph h = random_graph(1 + int(rng() % 8), rng);
        IntPolynomial pu = charpoly(adjacency_matrix(disjoint_union(g, h)));
        IntPolynomial pg = charpoly(adjacency_matrix(g));
        IntPolynomial ph = charpoly(adjacency_matrix(h));
        Poly prod = poly_mul(pg.coeffs, ph.coeffs);
        CHECK(pu.coeffs == prod);
    }
}

TEST_CASE("gen_spectrum complement pairing") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(1 + int(rng() % 9), rng);
        GenSpectrum a = gen_spectrum(g, SpectrumKind::Adjacency);
        GenSpectrum b = gen_spectrum(complement(g), SpectrumKind::Adjacency);
        CHECK(a.p == b.pc);
        CHECK(a.pc == b.p);
    }
}

TEST_CASE("the order-15 pair is generalized cospectral") {
    Graph l = parse_graph6("N]?GWWGAGP@FAMAM@F?");
    Graph r = parse_graph6("Ns_??KF@oK?p@a@b_po");
    CHECK(is_generalized_cospectral(l, r, SpectrumKind::Adjacency));
    CHECK_FALSE(are_isomorphic(l, r));
    CHECK_THROWS_AS(is_generalized_cospectral(l, single_vertex(), SpectrumKind::Adjacency),
                    OrderMismatch);
}

TEST_CASE("K_{1,3} and its complement are generalized Q-cospectral") {
    Graph star = star_graph(3);
    Graph co = complement(star);
    // both Q-charpolys equal x(x-1)^2(x-4) = x^4 - 6x^3 + 9x^2 - 4x
    std::vector<BigCount> expect{0, -4, 9, -6, 1};
    CHECK(charpoly(q_matrix(star)).coeffs == expect);
    CHECK(charpoly(q_matrix(co)).coeffs == expect);
    CHECK(is_generalized_cospectral(star, co, SpectrumKind::SignlessLaplacian));
    // but not adjacency-cospectral
    CHECK_FALSE(is_generalized_cospectral(star, co, SpectrumKind::Adjacency));
}

TEST_CASE("fingerprints") {
    Graph l = parse_graph6("N]?GWWGAGP@FAMAM@F?");
    Graph r = parse_graph6("Ns_??KF@oK?p@a@b_po");
    GenSpectrum gl = gen_spectrum(l, SpectrumKind::Adjacency);
    GenSpectrum gr = gen_spectrum(r, SpectrumKind::Adjacency);
    CHECK(fingerprint(gl) == fingerprint(gr));
    CHECK(digest128(fingerprint(gl)) == digest128(fingerprint(gr)));

    // the complement's key is the component swap of the original key
    GenSpectrum glc = gen_spectrum(complement(l), SpectrumKind::Adjacency);
    CHECK(glc.p == gl.pc);
    CHECK(glc.pc == gl.p);
    CHECK(fingerprint(glc) != fingerprint(gl));  // the pair is not self-complementary

    // kinds never share keys
    CHECK(fingerprint(gen_spectrum(l, SpectrumKind::SignlessLaplacian)) != fingerprint(gl));
}

TEST_CASE("serialization format") {
    IntPolynomial p = charpoly(adjacency_matrix(complete_graph(2)));
    CHECK(p.serialize() == "2 1 0 -1");
}

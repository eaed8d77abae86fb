#include "cospec/graph.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <bit>
#include <numeric>

namespace cospec {

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

long Graph::edge_count() const {
    long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

// ---------------------------------------------------------------- graph6

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw MalformedEncoding("empty graph6 line");
    int c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 126) throw MalformedEncoding("bad graph6 byte at position 0");
    if (c0 == 126) throw OrderOutOfRange("graph6 long form (order > 62) not supported");
    int n = c0 - 63;
    if (n < 1) throw OrderOutOfRange("graph6 order 0 not supported");
    std::size_t body = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (text.size() != 1 + body)
        throw MalformedEncoding("graph6 length mismatch: expected " +
                                std::to_string(1 + body) + " bytes, got " +
                                std::to_string(text.size()));
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(text[1 + bit / 6]);
            if (c < 63 || c > 126)
                throw MalformedEncoding("bad graph6 byte at position " +
                                        std::to_string(1 + bit / 6));
            if ((c - 63) >> (5 - bit % 6) & 1) g.set_edge(i, j);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::size_t body = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    std::string out(1 + body, char(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

// ------------------------------------------------------------ operations

Graph complement(const Graph& g) {
    int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.set_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    if (ng + nh > kMaxOrder)
        throw OrderOutOfRange("union exceeds maximum order " + std::to_string(kMaxOrder));
    Graph out(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.adjacent(u, v)) out.set_edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.adjacent(u, v)) out.set_edge(ng + u, ng + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.set_edge(u, g.order() + v);
    return out;
}

bool induced_p4_exists(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::uint64_t m = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                      (std::uint64_t{1} << c) | (std::uint64_t{1} << d);
                    int da = std::popcount(g.neighbors(a) & m);
                    int db = std::popcount(g.neighbors(b) & m);
                    int dc = std::popcount(g.neighbors(c) & m);
                    int dd = std::popcount(g.neighbors(d) & m);
                    if (da + db + dc + dd != 6) continue;  // exactly 3 edges
                    int mx = std::max({da, db, dc, dd});
                    int mn = std::min({da, db, dc, dd});
                    // 3 edges with degree multiset {1,1,2,2} is exactly P4
                    if (mx == 2 && mn == 1) return true;
                }
    return false;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.set_edge(int(i), int(j));
    return out;
}

// --------------------------------------------------- canonical labeling
//
// Individualization-refinement canonical form. The ordered partition is
// refined to equitability with invariant cell ordering; the first
// non-singleton cell is branched on; leaves are discrete partitions and the
// canonical form is the lexicographically greatest packed adjacency key.
// Exhaustive search with prefix pruning plus orbit pruning by discovered
// automorphisms, not a heuristic.

namespace {

struct Part {
    std::uint8_t verts[kCanonicalMaxOrder];  // vertices in cell order
    std::uint8_t start[kCanonicalMaxOrder];
    std::uint8_t len[kCanonicalMaxOrder];
    int ncells = 0;
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) rows_[v] = static_cast<std::uint32_t>(g.neighbors(v));
    }

    void run() {
        Part p;
        p.ncells = 1;
        p.start[0] = 0;
        p.len[0] = static_cast<std::uint8_t>(n_);
        for (int v = 0; v < n_; ++v) p.verts[v] = static_cast<std::uint8_t>(v);
        dfs(p, 0, true);
    }

    std::uint8_t best_perm[kCanonicalMaxOrder];

private:
    int n_;
    std::uint32_t rows_[kCanonicalMaxOrder];
    std::uint32_t best_bits_[kCanonicalMaxOrder];
    bool have_best_ = false;
    std::vector<std::array<std::uint8_t, kCanonicalMaxOrder>> gens_;  // automorphisms

    // neighbor-count signatures split every cell; repeat to the fixpoint
    void refine(Part& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::uint32_t mask[kCanonicalMaxOrder];
            for (int c = 0; c < p.ncells; ++c) {
                std::uint32_t m = 0;
                for (int i = 0; i < p.len[c]; ++i) m |= 1u << p.verts[p.start[c] + i];
                mask[c] = m;
            }
            for (int c = 0; c < p.ncells && !changed; ++c) {
                if (p.len[c] <= 1) continue;
                const int base = p.start[c], sz = p.len[c];
                unsigned __int128 sig[kCanonicalMaxOrder];
                for (int i = 0; i < sz; ++i) {
                    unsigned __int128 s = 0;
                    std::uint32_t row = rows_[p.verts[base + i]];
                    for (int cc = 0; cc < p.ncells; ++cc)
                        s |= static_cast<unsigned __int128>(std::popcount(row & mask[cc]))
                             << (5 * cc);
                    sig[i] = s;
                }
                for (int i = 1; i < sz; ++i) {  // stable insertion sort by sig
                    unsigned __int128 sv = sig[i];
                    std::uint8_t vv = p.verts[base + i];
                    int j = i - 1;
                    while (j >= 0 && sig[j] > sv) {
                        sig[j + 1] = sig[j];
                        p.verts[base + j + 1] = p.verts[base + j];
                        --j;
                    }
                    sig[j + 1] = sv;
                    p.verts[base + j + 1] = vv;
                }
                int pieces = 1;
                std::uint8_t piece_at[kCanonicalMaxOrder];
                piece_at[0] = 0;
                for (int i = 1; i < sz; ++i)
                    if (sig[i] != sig[i - 1]) piece_at[pieces++] = static_cast<std::uint8_t>(i);
                if (pieces == 1) continue;

                Part q;
                std::memcpy(q.verts, p.verts, sizeof(p.verts));
                q.ncells = 0;
                for (int cc = 0; cc < p.ncells; ++cc) {
                    if (cc != c) {
                        q.start[q.ncells] = p.start[cc];
                        q.len[q.ncells] = p.len[cc];
                        ++q.ncells;
                        continue;
                    }
                    for (int k = 0; k < pieces; ++k) {
                        int s0 = piece_at[k];
                        int s1 = k + 1 < pieces ? piece_at[k + 1] : sz;
                        q.start[q.ncells] = static_cast<std::uint8_t>(base + s0);
                        q.len[q.ncells] = static_cast<std::uint8_t>(s1 - s0);
                        ++q.ncells;
                    }
                }
                p = q;
                changed = true;
            }
        }
    }

    std::uint32_t bits_for(const std::uint8_t* verts, int k) const {
        std::uint32_t b = 0, row = rows_[verts[k]];
        for (int j = 0; j < k; ++j) b |= ((row >> verts[j]) & 1u) << j;
        return b;
    }

    // returns true when best was replaced inside this subtree
    bool dfs(Part p, int compared, bool tied) {
        refine(p);
        int prefix = 0;
        while (prefix < p.ncells && p.len[prefix] == 1) ++prefix;

        for (int k = compared; k < prefix; ++k) {
            std::uint32_t b = bits_for(p.verts, k);
            if (have_best_ && tied) {
                if (b < best_bits_[k]) return false;
                if (b > best_bits_[k]) tied = false;
            }
        }

        if (prefix == p.ncells) {  // discrete
            if (!have_best_ || !tied) {
                for (int k = 0; k < n_; ++k) best_bits_[k] = bits_for(p.verts, k);
                std::memcpy(best_perm, p.verts, sizeof(best_perm));
                have_best_ = true;
                return true;
            }
            // equal key: record the automorphism best_perm -> verts
            std::array<std::uint8_t, kCanonicalMaxOrder> sigma{};
            for (int i = 0; i < n_; ++i) sigma[best_perm[i]] = p.verts[i];
            gens_.push_back(sigma);
            return false;
        }

        const int cell = prefix, base = p.start[cell], sz = p.len[cell];
        std::uint8_t snapshot[kCanonicalMaxOrder];
        std::memcpy(snapshot, p.verts + base, sz);

        bool replaced = false;
        std::uint32_t tried_mask = 0;
        for (int i = 0; i < sz; ++i) {
            int v = snapshot[i];
            if (skip_by_orbit(p, prefix, v, tried_mask)) continue;
            tried_mask |= 1u << v;

            Part child;
            std::memcpy(child.verts, p.verts, sizeof(p.verts));
            // move v to the front of its cell
            int vpos = base;
            while (child.verts[vpos] != v) ++vpos;
            for (int j = vpos; j > base; --j) child.verts[j] = child.verts[j - 1];
            child.verts[base] = static_cast<std::uint8_t>(v);
            child.ncells = 0;
            for (int cc = 0; cc < p.ncells; ++cc) {
                if (cc != cell) {
                    child.start[child.ncells] = p.start[cc];
                    child.len[child.ncells] = p.len[cc];
                    ++child.ncells;
                    continue;
                }
                child.start[child.ncells] = static_cast<std::uint8_t>(base);
                child.len[child.ncells] = 1;
                ++child.ncells;
                child.start[child.ncells] = static_cast<std::uint8_t>(base + 1);
                child.len[child.ncells] = static_cast<std::uint8_t>(sz - 1);
                ++child.ncells;
            }

            if (dfs(child, prefix, tied)) {
                replaced = true;
                tied = true;  // the current path is now a prefix of best
            }
        }
        return replaced;
    }

    // v may be skipped when an automorphism fixing the placed prefix
    // pointwise maps an already-tried cell member onto it
    bool skip_by_orbit(const Part& p, int prefix, int v, std::uint32_t tried_mask) const {
        if (gens_.empty() || tried_mask == 0) return false;
        std::uint8_t uf[kCanonicalMaxOrder];
        for (int u = 0; u < n_; ++u) uf[u] = static_cast<std::uint8_t>(u);
        auto find = [&uf](int u) {
            while (uf[u] != u) u = uf[u] = uf[uf[u]];
            return u;
        };
        bool any = false;
        for (const auto& sigma : gens_) {
            bool usable = true;
            for (int i = 0; i < prefix; ++i)
                if (sigma[p.verts[i]] != p.verts[i]) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            any = true;
            for (int u = 0; u < n_; ++u) {
                int a = find(u), b = find(sigma[u]);
                if (a != b) uf[a] = static_cast<std::uint8_t>(b);
            }
        }
        if (!any) return false;
        int rv = find(v);
        for (int u = 0; u < n_; ++u)
            if ((tried_mask >> u) & 1u)
                if (find(u) == rv) return true;
        return false;
    }
};

}  // namespace

CanonicalLabel canonical_label(const Graph& g) {
    const int n = g.order();
    if (n > kCanonicalMaxOrder)
        throw OrderOutOfRange("canonical_label supports order <= " +
                              std::to_string(kCanonicalMaxOrder));
    Canonizer canon(g);
    canon.run();

    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(canon.best_perm[i], canon.best_perm[j])) out.set_edge(i, j);
    return CanonicalLabel{emit_graph6(out)};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    return canonical_label(g) == canonical_label(h);
}

// -------------------------------------------------------------- builders

Graph single_vertex() { return Graph(1); }

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.set_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.set_edge(0, v);
    return g;
}

}  // namespace cospec

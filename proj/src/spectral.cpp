#include "cospec/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace cospec {

std::string IntPolynomial::serialize() const {
    std::string out = std::to_string(degree());
    for (int i = degree(); i >= 0; --i) {
        out += ' ';
        out += coeffs[i].str();
    }
    return out;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            if (g.adjacent(i, j)) m.at(i, j) = 1;
    return m;
}

SymMatrix q_matrix(const Graph& g) {
    SymMatrix m = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) m.at(v, v) = g.degree(v);
    return m;
}

namespace {

// Berkowitz iteration: C_k = Toeplitz(t_k) * C_{k-1}, where t_k holds
// 1, -a_kk, -(r A^j r^T) for the leading principal blocks. Division-free.
template <class T>
std::vector<T> berkowitz(const SymMatrix& m) {
    const int n = m.order();
    std::vector<T> c{T(1), T(-m.at(0, 0))};  // charpoly of the 1x1 block, descending
    std::vector<T> v(n), w(n), t(n + 1);
    for (int k = 2; k <= n; ++k) {
        // t[0] = 1, t[1] = -a_{k-1,k-1}, t[j] = -(r A^{j-2} s), A = (k-1) block
        t[0] = T(1);
        t[1] = T(-m.at(k - 1, k - 1));
        for (int i = 0; i < k - 1; ++i) v[i] = T(m.at(i, k - 1));
        for (int j = 2; j <= k; ++j) {
            T dot = T(0);
            for (int i = 0; i < k - 1; ++i) dot += T(m.at(k - 1, i)) * v[i];
            t[j] = -dot;
            if (j == k) break;
            for (int i = 0; i < k - 1; ++i) {
                T acc = T(0);
                for (int l = 0; l < k - 1; ++l) acc += T(m.at(i, l)) * v[l];
                w[i] = acc;
            }
            std::swap(v, w);
        }
        std::vector<T> next(k + 1, T(0));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= std::min<int>(i, k - 1); ++j)
                if (i - j <= k) next[i] += t[i - j] * c[j];
        c = std::move(next);
    }
    return c;  // descending: c[0] x^n + ... + c[n]
}

// Safety bound for the 128-bit path. Coefficients of a k x k block obey the
// Hadamard bound 2^k (sqrt(k) A)^k and Toeplitz entries obey k^(k-1) A^k, so
// every transient product fits in n + 1.5 n log2(n) + 2 n log2(A) bits plus
// a log2(n+1) accumulation term.
bool fits_int128(const SymMatrix& m) {
    const int n = m.order();
    std::int64_t maxabs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, std::abs(m.at(i, j)));
    if (maxabs == 0) return true;
    double bits = n + 1.5 * n * std::log2(double(n)) +
                  2.0 * n * std::log2(double(maxabs)) + std::log2(double(n) + 1);
    return bits < 120.0;
}

}  // namespace

IntPolynomial charpoly(const SymMatrix& m) {
    const int n = m.order();
    IntPolynomial p;
    p.coeffs.resize(n + 1);
    if (fits_int128(m)) {
        auto c = berkowitz<__int128>(m);
        for (int i = 0; i <= n; ++i) {
            __int128 x = c[n - i];
            bool neg = x < 0;
            if (neg) x = -x;
            BigCount b = static_cast<std::uint64_t>(x >> 64);
            b <<= 64;
            b += static_cast<std::uint64_t>(x);
            p.coeffs[i] = neg ? -b : b;
        }
    } else {
        auto c = berkowitz<BigCount>(m);
        for (int i = 0; i <= n; ++i) p.coeffs[i] = std::move(c[n - i]);
    }
    return p;
}

GenSpectrum gen_spectrum(const Graph& g, SpectrumKind kind) {
    auto mat = [&](const Graph& x) {
        return kind == SpectrumKind::Adjacency ? adjacency_matrix(x) : q_matrix(x);
    };
    GenSpectrum gs;
    gs.kind = kind;
    gs.p = charpoly(mat(g));
    gs.pc = charpoly(mat(complement(g)));
    return gs;
}

bool is_generalized_cospectral(const Graph& g, const Graph& h, SpectrumKind kind) {
    if (g.order() != h.order())
        throw OrderMismatch("cospectrality is defined for graphs of equal order");
    return gen_spectrum(g, kind) == gen_spectrum(h, kind);
}

std::string fingerprint(const GenSpectrum& gs) {
    std::string out = gs.kind == SpectrumKind::Adjacency ? "A|" : "Q|";
    out += gs.p.serialize();
    out += '|';
    out += gs.pc.serialize();
    return out;
}

Digest128 digest128(const std::string& bytes) {
    // FNV-1a over two independent lanes; deterministic across platforms.
    std::uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x9e3779b97f4a7c15ull;
    for (unsigned char c : bytes) {
        h1 = (h1 ^ c) * 0x100000001b3ull;
        h2 = (h2 ^ (c + 0x9e)) * 0xc2b2ae3d27d4eb4full;
        h2 ^= h2 >> 29;
    }
    return Digest128{h1, h2};
}

}  // namespace cospec

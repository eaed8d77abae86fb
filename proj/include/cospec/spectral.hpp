#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/numeric.hpp"

namespace cospec {

// Exact monic characteristic polynomial det(xI - M).
struct IntPolynomial {
    std::vector<BigCount> coeffs;  // ascending powers; coeffs[degree] == 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    // "degree c_deg ... c_0" in decimal, leading to constant.
    std::string serialize() const;

    bool operator==(const IntPolynomial&) const = default;
};

// Small dense symmetric integer matrix.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    int order() const { return n_; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::int64_t* data() const { return a_.data(); }

private:
    int n_;
    std::vector<std::int64_t> a_;
};

SymMatrix adjacency_matrix(const Graph& g);
// Signless Laplacian: degree diagonal plus adjacency.
SymMatrix q_matrix(const Graph& g);

// Division-free (Berkowitz) characteristic polynomial over exact integers.
// A 128-bit fast path is used when a conservative magnitude bound proves it
// safe; results are identical to the big-integer path.
IntPolynomial charpoly(const SymMatrix& m);

enum class SpectrumKind { Adjacency, SignlessLaplacian };

// The cospectrality fingerprint: charpolys of the graph and its complement.
struct GenSpectrum {
    SpectrumKind kind;
    IntPolynomial p;   // graph
    IntPolynomial pc;  // complement

    bool operator==(const GenSpectrum&) const = default;
};

GenSpectrum gen_spectrum(const Graph& g, SpectrumKind kind);

bool is_generalized_cospectral(const Graph& g, const Graph& h, SpectrumKind kind);

// Injective key over GenSpectrum values (exact serialized coefficients).
std::string fingerprint(const GenSpectrum& gs);

// Deterministic 128-bit digest of a byte string; pre-buckets corpora before
// exact comparison, never decides equality by itself.
struct Digest128 {
    std::uint64_t hi = 0, lo = 0;
    auto operator<=>(const Digest128&) const = default;
};

Digest128 digest128(const std::string& bytes);

}  // namespace cospec

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cospec/cotree.hpp"
#include "cospec/numeric.hpp"

namespace cospec {

// Exact coefficients of H(x) (m == kUnrestricted) or H^(m)(x), indices 1..N.
struct CoeffTable {
    static constexpr int kUnrestricted = 0;

    int m = kUnrestricted;
    int N = 0;
    std::vector<BigCount> coeffs;  // coeffs[n] for n in 1..N; coeffs[0] unused

    const BigCount& at(int n) const { return coeffs.at(n); }
};

// H_1..H_N from the multiset functional equation, via the Euler-transform
// (logarithmic-derivative) recurrence. Exact, O(N^2) big-integer work.
CoeffTable count_hierarchies(int N);

// H_n^(m): hierarchies avoiding any fixed size-m subhierarchy. The table
// depends on m only, not on the pattern's shape.
CoeffTable count_avoiding(int N, int m);

// Unlabeled cographs of order n: 1 for n = 1, 2*H_n for n >= 2.
BigCount count_cographs(int n);

// 1 - H_n^(m)/H_n as an exact rational.
Rational containment_fraction(int n, int m);

// Unlabeled simple graphs of order n (Burnside over the pair group); used to
// validate externally supplied corpora.
BigCount count_all_graphs(int n);

// Streams one canonical representative per isomorphism class, duplicate-free
// by construction, in a deterministic order. Counts match the tables.
void enumerate_hierarchies(int n, const std::function<void(const Hierarchy&)>& fn);
void enumerate_cographs(int n, const std::function<void(const Cotree&)>& fn);

// Convenience collectors.
std::vector<Hierarchy> all_hierarchies(int n);
std::vector<Cotree> all_cographs(int n);

}  // namespace cospec

#include "cospec/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "cospec/errors.hpp"

namespace cospec {

namespace {

// Both functional equations have the shape
//     2H(x) + E(x) = prod_{n>=1} (1-x^n)^{-H_n},   E(x) = 1 - x (+ x^m),
// so with P(x) = 1 + sum b_n x^n the log-derivative gives
//     n b_n = sum_{k=1}^{n} d_k b_{n-k},   d_k = sum_{d|k} d H_d,
// and b_n = 2 H_n + e_n. Solving degree by degree for H_n:
//     n H_n = sum_{k=1}^{n-1} d_k b_{n-k} + sigma_n - n e_n,
// where sigma_n = sum over proper divisors d of n of d H_d.
CoeffTable table_for(int N, int m) {
    if (N < 1) throw Error("truncation order must be >= 1");
    CoeffTable t;
    t.m = m;
    t.N = N;
    t.coeffs.assign(N + 1, 0);

    std::vector<BigCount> b(N + 1, 0), d(N + 1, 0), sigma(N + 1, 0);
    auto e = [&](int n) -> int {
        if (n == 1) return -1;
        if (m != CoeffTable::kUnrestricted && n == m) return 1;
        return 0;
    };

    for (int n = 1; n <= N; ++n) {
        BigCount acc = sigma[n] - n * BigCount(e(n));
        for (int k = 1; k < n; ++k) acc += d[k] * b[n - k];
        BigCount h = acc / n;  // exact
        t.coeffs[n] = h;
        b[n] = 2 * h + e(n);
        d[n] = sigma[n] + n * h;
        for (int k = 2 * n; k <= N; k += n) sigma[k] += n * h;
    }
    return t;
}

}  // namespace

CoeffTable count_hierarchies(int N) { return table_for(N, CoeffTable::kUnrestricted); }

CoeffTable count_avoiding(int N, int m) {
    if (m < 2) throw PatternTooSmall("avoidance pattern size must be >= 2");
    return table_for(N, m);
}

BigCount count_cographs(int n) {
    if (n < 1) throw Error("order must be >= 1");
    if (n == 1) return 1;
    return 2 * count_hierarchies(n).at(n);
}

Rational containment_fraction(int n, int m) {
    if (m < 2) throw PatternTooSmall("avoidance pattern size must be >= 2");
    if (n < 1) throw Error("order must be >= 1");
    if (n < m) return Rational(0);
    BigCount total = count_hierarchies(n).at(n);
    BigCount avoiding = count_avoiding(n, m).at(n);
    return Rational(1) - Rational(avoiding, total);
}

// -------------------------------------------------- all-graph counting

namespace {

void partitions_rec(int rem, int max_part, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (rem == 0) {
        fn(cur);
        return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rem - p, p, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

BigCount count_all_graphs(int n) {
    if (n < 1) throw Error("order must be >= 1");
    // sum over cycle types: (n!/z_lambda) * 2^(pair cycles), divided by n!
    Rational total = 0;
    BigCount nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;

    std::vector<int> cur;
    partitions_rec(n, n, cur, [&](const std::vector<int>& parts) {
        BigCount z = 1;
        int run = 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            z *= parts[i];
            if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
                ++run;
                z *= run;
            } else {
                run = 1;
            }
        }
        long pair_cycles = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            pair_cycles += parts[i] / 2;
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                pair_cycles += std::gcd(parts[i], parts[j]);
        }
        BigCount pw = 1;
        pw <<= pair_cycles;
        total += Rational(nfact, z) * Rational(pw);
    });
    total /= Rational(nfact);
    if (denominator(total) != 1) throw Error("Burnside sum did not reduce to an integer");
    return numerator(total);
}

// ------------------------------------------------------- enumeration

namespace {

// Canonical texts of all hierarchies of each size, built bottom-up: a
// hierarchy of size n is an unordered multiset (>= 2 parts) of smaller ones.
class HierarchyPool {
public:
    const std::vector<std::string>& texts(int size) {
        build_to(size);
        return pool_[size];
    }

    // Streams size-n canonical texts without storing them.
    void stream(int n, const std::function<void(const std::string&)>& fn) {
        if (n == 1) {
            fn(".");
            return;
        }
        build_to(n - 1);
        std::vector<const std::string*> parts;
        gen(n, n - 1, 0, parts, fn);
    }

private:
    void build_to(int size) {
        if (pool_.empty()) pool_.assign(1, {});
        if (pool_.size() < 2) pool_.push_back({"."});
        for (int s = static_cast<int>(pool_.size()); s <= size; ++s) {
            std::vector<std::string> out;
            std::vector<const std::string*> parts;
            gen(s, s - 1, 0, parts,
                [&](const std::string& text) { out.push_back(text); });
            pool_.push_back(std::move(out));
        }
    }

    // Multisets in non-increasing (size, rank) order; each completed multiset
    // is emitted as a canonical node text.
    void gen(int rem, int size_cap, int rank_start, std::vector<const std::string*>& parts,
             const std::function<void(const std::string&)>& fn) {
        if (rem == 0) {
            if (parts.size() < 2) return;
            std::vector<const std::string*> sorted = parts;
            std::sort(sorted.begin(), sorted.end(), [](const std::string* a, const std::string* b) {
                return text_less(*a, *b);
            });
            std::string node = "(";
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i) node += ' ';
                node += *sorted[i];
            }
            node += ')';
            fn(node);
            return;
        }
        for (int s = std::min(rem, size_cap); s >= 1; --s) {
            const auto& items = pool_[s];
            int r0 = (s == size_cap) ? rank_start : 0;
            for (int r = r0; r < static_cast<int>(items.size()); ++r) {
                parts.push_back(&items[r]);
                gen(rem - s, s, r, parts, fn);
                parts.pop_back();
            }
        }
    }

    static bool text_less(const std::string& a, const std::string& b) {
        int ra = a[0] == '.' ? 0 : 1, rb = b[0] == '.' ? 0 : 1;
        if (ra != rb) return ra < rb;
        return a < b;
    }

    std::vector<std::vector<std::string>> pool_;
};

}  // namespace

void enumerate_hierarchies(int n, const std::function<void(const Hierarchy&)>& fn) {
    if (n < 1) throw Error("size must be >= 1");
    HierarchyPool pool;
    pool.stream(n, [&](const std::string& text) { fn(parse_hierarchy(text)); });
}

void enumerate_cographs(int n, const std::function<void(const Cotree&)>& fn) {
    if (n < 1) throw Error("order must be >= 1");
    if (n == 1) {
        fn(Cotree{});
        return;
    }
    HierarchyPool pool;
    pool.stream(n, [&](const std::string& text) {
        Hierarchy h = parse_hierarchy(text);
        fn(Cotree(h, NodeLabel::Union));
        fn(Cotree(std::move(h), NodeLabel::Join));
    });
}

std::vector<Hierarchy> all_hierarchies(int n) {
    std::vector<Hierarchy> out;
    enumerate_hierarchies(n, [&](const Hierarchy& h) { out.push_back(h); });
    return out;
}

std::vector<Cotree> all_cographs(int n) {
    std::vector<Cotree> out;
    enumerate_cographs(n, [&](const Cotree& t) { out.push_back(t); });
    return out;
}

}  // namespace cospec

#include "cospec/threshold.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "cospec/errors.hpp"

namespace cospec {

Graph realize_threshold(const CreationSequence& seq) {
    int n = seq.order();
    Graph g(n);
    for (int v = 1; v < n; ++v)
        if (seq.steps[v - 1] == CreationStep::Dominating)
            for (int u = 0; u < v; ++u) g.set_edge(u, v);
    return g;
}

bool is_threshold(const Graph& g) {
    int n = g.order();
    std::uint64_t alive = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int remaining = n;
    while (remaining > 1) {
        bool peeled = false;
        for (std::uint64_t m = alive; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int deg = std::popcount(g.neighbors(v) & alive);
            if (deg == 0 || deg == remaining - 1) {
                alive &= ~(std::uint64_t{1} << v);
                --remaining;
                peeled = true;
                break;
            }
        }
        if (!peeled) return false;
    }
    return true;
}

std::vector<Graph> enumerate_threshold(int n) {
    if (n < 1) throw Error("order must be >= 1");
    if (n > kCanonicalMaxOrder)
        throw BudgetExceeded("threshold enumeration deduplicates canonically; order <= " +
                             std::to_string(kCanonicalMaxOrder));
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        CreationSequence seq;
        for (int i = 0; i < n - 1; ++i)
            seq.steps.push_back((bits >> i) & 1 ? CreationStep::Dominating
                                                : CreationStep::Isolated);
        Graph g = realize_threshold(seq);
        if (seen.insert(canonical_label(g).bytes).second) out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<std::vector<int>> charpoly_collisions(const std::vector<Graph>& graphs,
                                                  SpectrumKind kind) {
    std::map<std::string, std::vector<int>> buckets;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        SymMatrix m = kind == SpectrumKind::Adjacency ? adjacency_matrix(graphs[i])
                                                      : q_matrix(graphs[i]);
        buckets[charpoly(m).serialize()].push_back(static_cast<int>(i));
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, members] : buckets)
        if (members.size() >= 2) classes.push_back(std::move(members));
    return classes;
}

}  // namespace

bool check_lazzarin(int n, int budget) {
    if (n < 1) throw Error("order must be >= 1");
    if (n > budget) throw BudgetExceeded("check_lazzarin budget is order <= " +
                                         std::to_string(budget));
    auto graphs = enumerate_threshold(n);
    return charpoly_collisions(graphs, SpectrumKind::Adjacency).empty();
}

QMateStats q_mate_fraction(int n, int budget) {
    if (n < 4) throw Error("q_mate_fraction requires n >= 4");
    if (n > budget) throw BudgetExceeded("q_mate_fraction budget is order <= " +
                                         std::to_string(budget));
    auto graphs = enumerate_threshold(n);
    QMateStats stats;
    stats.total = static_cast<long>(graphs.size());
    stats.classes = charpoly_collisions(graphs, SpectrumKind::SignlessLaplacian);
    for (const auto& cls : stats.classes) stats.with_mate += static_cast<long>(cls.size());
    stats.fraction = Rational(stats.with_mate, stats.total);
    return stats;
}

}  // namespace cospec

#include "cospec/genall.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "cospec/enumeration.hpp"
#include "cospec/errors.hpp"
#include "cospec/parallel.hpp"

namespace cospec {

std::vector<std::string> all_graphs_graph6(int n, int budget) {
    if (n < 1) throw Error("order must be >= 1");
    if (n > budget)
        throw BudgetExceeded("all-graph generation budget is order <= " +
                             std::to_string(budget));

    std::vector<std::string> level{emit_graph6(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> bases;
        bases.reserve(level.size());
        for (const auto& s : level) bases.push_back(parse_graph6(s));

        const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
        std::vector<std::vector<std::string>> local(worker_count());
        parallel_chunks(bases.size(), [&](int w, std::size_t b, std::size_t e) {
            std::unordered_set<std::string> seen;
            for (std::size_t i = b; i < e; ++i) {
                for (std::uint64_t s = 0; s < subsets; ++s) {
                    Graph g(k);
                    for (int u = 0; u < k - 1; ++u) {
                        for (int v = u + 1; v < k - 1; ++v)
                            if (bases[i].adjacent(u, v)) g.set_edge(u, v);
                        if ((s >> u) & 1) g.set_edge(u, k - 1);
                    }
                    seen.insert(canonical_label(g).bytes);
                }
            }
            local[w].assign(seen.begin(), seen.end());
        });

        std::unordered_set<std::string> merged;
        for (auto& part : local) merged.insert(part.begin(), part.end());
        level.assign(merged.begin(), merged.end());
        std::sort(level.begin(), level.end());

        BigCount expected = count_all_graphs(k);
        if (BigCount(level.size()) != expected)
            throw Error("graph generation self-check failed at order " + std::to_string(k) +
                        ": got " + std::to_string(level.size()) + ", expected " +
                        expected.str());
    }
    return level;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    for (const auto& l : lines) out << l << '\n';
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open for reading: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace cospec

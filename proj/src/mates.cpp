#include "cospec/mates.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cospec/enumeration.hpp"
#include "cospec/errors.hpp"
#include "cospec/genall.hpp"
#include "cospec/parallel.hpp"

namespace cospec {

namespace {

struct DigestHash {
    std::size_t operator()(const Digest128& d) const noexcept {
        return static_cast<std::size_t>(d.hi ^ (d.lo * 0x9e3779b97f4a7c15ull));
    }
    bool operator()(const Digest128& a, const Digest128& b) const noexcept { return a == b; }
};

CollisionReport classes_from_groups(
    std::map<std::string, std::vector<std::string>>&& groups, SpectrumKind kind,
    long corpus_size) {
    CollisionReport report;
    report.kind = kind;
    report.corpus_size = corpus_size;
    for (auto& [fp, members] : groups) {
        // collapse isomorphic duplicates, keep first representative
        std::vector<std::string> kept;
        std::set<std::string> canon_seen;
        for (const auto& g6 : members)
            if (canon_seen.insert(canonical_label(parse_graph6(g6)).bytes).second)
                kept.push_back(g6);
        if (kept.size() < 2) continue;
        CollisionClass cls;
        cls.fingerprint = fp;
        for (const auto& g6 : kept) {
            cls.members.push_back(g6);
            cls.is_cograph.push_back(!induced_p4_exists(parse_graph6(g6)));
        }
        report.classes.push_back(std::move(cls));
    }
    return report;  // std::map keeps classes sorted by fingerprint
}

}  // namespace

CollisionReport find_collision_classes(const std::vector<Graph>& corpus, SpectrumKind kind) {
    if (corpus.empty()) return CollisionReport{kind, 0, {}};
    int order = corpus.front().order();
    for (const auto& g : corpus)
        if (g.order() != order)
            throw OrderMismatch("collision corpus must have uniform order");

    // pass 1: digests (parallel)
    std::vector<Digest128> digests(corpus.size());
    parallel_chunks(corpus.size(), [&](int, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            digests[i] = digest128(fingerprint(gen_spectrum(corpus[i], kind)));
    });
    std::unordered_map<Digest128, int, DigestHash, DigestHash> counts;
    for (const auto& d : digests) ++counts[d];

    // pass 2: exact fingerprints for digest-colliding candidates only
    std::map<std::string, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (counts[digests[i]] >= 2)
            groups[fingerprint(gen_spectrum(corpus[i], kind))].push_back(
                emit_graph6(corpus[i]));
    return classes_from_groups(std::move(groups), kind, static_cast<long>(corpus.size()));
}

CollisionReport find_collision_classes_stream(const GraphSource& source, SpectrumKind kind) {
    // pass 1: digests in stream order, computed in parallel batches
    std::vector<Digest128> digests;
    int order = -1;
    {
        std::vector<Graph> batch;
        auto flush = [&]() {
            std::size_t base = digests.size();
            digests.resize(base + batch.size());
            parallel_chunks(batch.size(), [&](int, std::size_t b, std::size_t e) {
                for (std::size_t i = b; i < e; ++i)
                    digests[base + i] =
                        digest128(fingerprint(gen_spectrum(batch[i], kind)));
            });
            batch.clear();
        };
        source([&](const Graph& g) {
            if (order < 0)
                order = g.order();
            else if (g.order() != order)
                throw OrderMismatch("collision corpus must have uniform order");
            batch.push_back(g);
            if (batch.size() >= 8192) flush();
        });
        flush();
    }
    std::unordered_map<Digest128, int, DigestHash, DigestHash> counts;
    for (const auto& d : digests) ++counts[d];

    // pass 2: exact fingerprints only where the stored digest collides
    std::map<std::string, std::vector<std::string>> groups;
    std::size_t pos = 0;
    source([&](const Graph& g) {
        if (counts[digests[pos]] >= 2)
            groups[fingerprint(gen_spectrum(g, kind))].push_back(emit_graph6(g));
        ++pos;
    });
    if (pos != digests.size())
        throw Error("graph stream changed length between passes");
    return classes_from_groups(std::move(groups), kind, static_cast<long>(pos));
}

// ------------------------------------------------------ base pair

BasePair discover_base_pair(const std::vector<Graph>& all_order9, CollisionReport* report_out) {
    for (const auto& g : all_order9)
        if (g.order() != 9) throw CorpusIncomplete("corpus must contain order-9 graphs only");
    if (BigCount(all_order9.size()) != count_all_graphs(9))
        throw CorpusIncomplete("expected all " + count_all_graphs(9).str() +
                               " graphs of order 9, got " +
                               std::to_string(all_order9.size()));
    {
        std::unordered_set<std::string> canon;
        for (const auto& g : all_order9) canon.insert(canonical_label(g).bytes);
        if (BigCount(canon.size()) != count_all_graphs(9))
            throw CorpusIncomplete("corpus contains isomorphic duplicates");
    }

    CollisionReport report = find_collision_classes(all_order9, SpectrumKind::Adjacency);
    if (report_out) {
        CollisionReport cograph_only;
        cograph_only.kind = report.kind;
        cograph_only.corpus_size = report.corpus_size;
        for (const auto& cls : report.classes)
            if (std::find(cls.is_cograph.begin(), cls.is_cograph.end(), true) !=
                cls.is_cograph.end())
                cograph_only.classes.push_back(cls);
        *report_out = std::move(cograph_only);
    }

    // collect the non-DGS cographs
    struct Hit {
        std::string g6;
        const CollisionClass* cls;
    };
    std::vector<Hit> cograph_hits;
    for (const auto& cls : report.classes)
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            if (cls.is_cograph[i]) cograph_hits.push_back({cls.members[i], &cls});

    if (cograph_hits.size() != 2)
        throw AmbiguousBasePair("expected exactly 2 non-DGS cographs of order 9, found " +
                                std::to_string(cograph_hits.size()));
    Graph a = parse_graph6(cograph_hits[0].g6);
    Graph b = parse_graph6(cograph_hits[1].g6);
    if (!are_isomorphic(complement(a), b))
        throw AmbiguousBasePair("the two non-DGS cographs are not complements");

    // deterministic orientation: L has the smaller canonical label
    int l_index = canonical_label(a) <= canonical_label(b) ? 0 : 1;
    Graph L = l_index == 0 ? a : b;
    const CollisionClass& lcls = *cograph_hits[l_index].cls;

    // R: non-cograph classmate with the smallest canonical label
    std::optional<std::pair<CanonicalLabel, Graph>> best;
    for (std::size_t i = 0; i < lcls.members.size(); ++i) {
        if (lcls.is_cograph[i]) continue;
        Graph cand = parse_graph6(lcls.members[i]);
        CanonicalLabel key = canonical_label(cand);
        if (!best || key < best->first) best = {key, cand};
    }
    if (!best) throw AmbiguousBasePair("no non-cograph mate found in the collision class");

    BasePair bp{L, best->second, decompose(L)};
    if (!is_generalized_cospectral(bp.L, bp.R, SpectrumKind::Adjacency) ||
        !induced_p4_exists(bp.R) || induced_p4_exists(bp.L))
        throw Error("base pair failed its defining invariants");
    return bp;
}

BasePair discover_base_pair_file(const std::string& corpus_path, CollisionReport* report_out) {
    std::vector<Graph> corpus;
    for (const auto& line : read_lines(corpus_path)) corpus.push_back(parse_graph6(line));
    return discover_base_pair(corpus, report_out);
}

void save_base_pair(const BasePair& bp, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << emit_graph6(bp.L) << '\n'
        << emit_graph6(bp.R) << '\n'
        << canonical_form(bp.Tstar) << '\n';
}

BasePair load_base_pair(const std::string& path) {
    auto lines = read_lines(path);
    if (lines.size() != 3) throw Error("base pair cache must have exactly 3 lines");
    BasePair bp{parse_graph6(lines[0]), parse_graph6(lines[1]), parse_cotree(lines[2])};
    if (!is_generalized_cospectral(bp.L, bp.R, SpectrumKind::Adjacency))
        throw ConsistencyFailure("cached base pair is not generalized cospectral");
    if (induced_p4_exists(bp.L) || !induced_p4_exists(bp.R))
        throw ConsistencyFailure("cached base pair has wrong P4 flags");
    if (!are_isomorphic(realize(bp.Tstar), bp.L))
        throw ConsistencyFailure("cached cotree does not realize L");
    return bp;
}

// --------------------------------------------------- mate construction

Graph construct_mate(const Cotree& t, const BasePair& base) {
    auto u = find_labeled_subtree(t, base.Tstar);
    if (!u) throw PatternAbsent("cotree does not contain the base pattern as a labeled subtree");
    return realize_quasi(substitute_star(t, *u, base.R));
}

bool verify_union_join(const Graph& g1, const Graph& g2, const Graph& h) {
    if (g1.order() != g2.order() ||
        !is_generalized_cospectral(g1, g2, SpectrumKind::Adjacency))
        throw PreconditionViolated("inputs must be generalized cospectral of equal order");
    bool u = is_generalized_cospectral(disjoint_union(g1, h), disjoint_union(g2, h),
                                       SpectrumKind::Adjacency);
    bool j = is_generalized_cospectral(join(g1, h), join(g2, h), SpectrumKind::Adjacency);
    return u && j;
}

// ------------------------------------------------------------- survey

DgsSurvey dgs_survey(int n, SpectrumKind kind, int budget) {
    if (n < 1) throw Error("order must be >= 1");
    if (n > budget)
        throw BudgetExceeded("dgs_survey budget is order <= " + std::to_string(budget));

    DgsSurvey out;
    out.total = count_cographs(n);

    GraphSource source = [n](const std::function<void(const Graph&)>& sink) {
        enumerate_cographs(n, [&](const Cotree& t) { sink(realize(t)); });
    };
    out.report = find_collision_classes_stream(source, kind);
    for (const auto& cls : out.report.classes)
        out.with_mate_in_family += static_cast<long>(cls.members.size());
    return out;
}

// ----------------------------------------------- random cotree factory

namespace {

Hierarchy random_hierarchy(int size, std::mt19937_64& rng) {
    if (size == 1) return Hierarchy{};
    // random composition of `size` into >= 2 parts, each part recursively
    int parts = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(size - 1));
    parts = std::min(parts, size);
    std::vector<int> sizes(parts, 1);
    for (int extra = size - parts; extra > 0; --extra) ++sizes[rng() % parts];
    std::vector<Hierarchy> kids;
    kids.reserve(parts);
    for (int s : sizes) kids.push_back(random_hierarchy(s, rng));
    return Hierarchy(std::move(kids));
}

// replace a random leaf of host with the pattern skeleton
Hierarchy graft(const Hierarchy& host, const Hierarchy& pattern, int leaf_index,
                int& counter) {
    if (host.leaf()) return counter++ == leaf_index ? pattern : host;
    std::vector<Hierarchy> kids;
    kids.reserve(host.children().size());
    for (const auto& k : host.children()) kids.push_back(graft(k, pattern, leaf_index, counter));
    return Hierarchy(std::move(kids));
}

}  // namespace

Cotree random_cotree_containing(const Cotree& pattern, int max_size, std::mt19937_64& rng) {
    int psize = pattern.size();
    if (max_size < psize) throw Error("max_size smaller than the pattern");
    int host_size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - psize + 1));
    Hierarchy host = random_hierarchy(host_size, rng);
    int leaf = static_cast<int>(rng() % static_cast<std::uint64_t>(host_size));
    int counter = 0;
    Hierarchy grafted = graft(host, pattern.hierarchy(), leaf, counter);

    // exactly one root-label choice makes the occurrence label-compatible
    Cotree u(grafted, NodeLabel::Union);
    if (find_labeled_subtree(u, pattern)) return u;
    Cotree j(std::move(grafted), NodeLabel::Join);
    if (!find_labeled_subtree(j, pattern))
        throw Error("grafted hierarchy lost the pattern occurrence");
    return j;
}

}  // namespace cospec

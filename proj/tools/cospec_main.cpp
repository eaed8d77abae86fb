#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cospec/acceptance.hpp"
#include "cospec/asymptotics.hpp"
#include "cospec/enumeration.hpp"
#include "cospec/genall.hpp"
#include "cospec/mates.hpp"
#include "cospec/threshold.hpp"

using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_or_print(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << payload;
}

void require_file(const std::string& path) {
    if (!std::filesystem::exists(path)) throw InputError("no such file: " + path);
}

json report_classes(const cospec::CollisionReport& report) {
    json classes = json::array();
    for (const auto& cls : report.classes) {
        json c;
        c["fingerprint"] = cls.fingerprint;
        c["members"] = cls.members;
        c["is_cograph"] = cls.is_cograph;
        classes.push_back(std::move(c));
    }
    return classes;
}

// ------------------------------------------------------------- commands

int cmd_count(int n, int avoid, bool cographs, const std::string& stream,
              const std::string& format, const std::string& out) {
    std::string payload;
    if (!stream.empty()) {
        // canonical tree-grammar lines, one object of size/order n per line
        if (stream == "hierarchies") {
            cospec::enumerate_hierarchies(n, [&](const cospec::Hierarchy& h) {
                payload += cospec::canonical_form(h);
                payload += '\n';
            });
        } else {
            cospec::enumerate_cographs(n, [&](const cospec::Cotree& t) {
                payload += cospec::canonical_form(t);
                payload += '\n';
            });
        }
        write_or_print(out, payload);
        return 0;
    }
    if (format == "csv") {
        payload = "n,value\n";
        if (cographs) {
            for (int i = 1; i <= n; ++i)
                payload += std::to_string(i) + "," + cospec::count_cographs(i).str() + "\n";
        } else {
            cospec::CoeffTable t = avoid ? cospec::count_avoiding(n, avoid)
                                         : cospec::count_hierarchies(n);
            for (int i = 1; i <= n; ++i)
                payload += std::to_string(i) + "," + t.at(i).str() + "\n";
        }
    } else {
        json j;
        j["schema"] = "cospec-count-v1";
        j["n"] = n;
        json values = json::array();
        if (cographs) {
            j["table"] = "cographs";
            for (int i = 1; i <= n; ++i) values.push_back(cospec::count_cographs(i).str());
        } else {
            j["table"] = avoid ? "avoiding" : "hierarchies";
            if (avoid) j["m"] = avoid;
            cospec::CoeffTable t = avoid ? cospec::count_avoiding(n, avoid)
                                         : cospec::count_hierarchies(n);
            for (int i = 1; i <= n; ++i) values.push_back(t.at(i).str());
        }
        j["values"] = std::move(values);
        payload = j.dump(2) + "\n";
    }
    write_or_print(out, payload);
    return 0;
}

int cmd_asym(int m, unsigned precision, int N, const std::string& out) {
    unsigned digits = cospec::digits10_for_bits(precision);
    auto str_of = [&](const cospec::BigFloat& x) { return x.str(digits); };

    cospec::AsymptoticEstimate est = cospec::growth_constant(m, precision, N);
    json j;
    j["schema"] = "cospec-asym-v1";
    j["m"] = m;
    j["unrestricted"] = m == cospec::CoeffTable::kUnrestricted;
    j["rho"] = str_of(est.rho);
    j["C"] = str_of(est.C);
    j["a1"] = str_of(est.a1);
    j["N"] = est.N_used;
    j["precision"] = est.precision_bits;
    j["residuals"] = {{"radius_error", str_of(est.radius_error)},
                      {"fyy", str_of(est.fyy)},
                      {"equation_residual", str_of(est.equation_residual)},
                      {"tail_bound", str_of(est.tail_bound)}};
    if (m != cospec::CoeffTable::kUnrestricted) {
        cospec::AsymptoticEstimate e0 =
            cospec::growth_constant(cospec::CoeffTable::kUnrestricted, precision, N);
        cospec::MateFraction mf = cospec::mate_fraction_asymptote(est, e0);
        j["vs_unrestricted"] = {{"ratio_base", str_of(mf.ratio_base)},
                                {"coeff", str_of(mf.coeff)},
                                {"half_threshold", cospec::half_threshold(mf)}};
    }
    write_or_print(out, j.dump(2) + "\n");
    return 0;
}

int cmd_discover(const std::string& corpus, const std::string& cache,
                 const std::string& report_path, bool force) {
    if (!force && std::filesystem::exists(cache)) {
        try {
            cospec::BasePair bp = cospec::load_base_pair(cache);
            std::cout << "cache valid, skipping discovery\n"
                      << "L " << cospec::emit_graph6(bp.L) << "\n"
                      << "R " << cospec::emit_graph6(bp.R) << "\n"
                      << "Tstar " << cospec::canonical_form(bp.Tstar) << "\n";
            return 0;
        } catch (const cospec::Error&) {
            // stale cache: fall through to a fresh discovery
        }
    }
    require_file(corpus);
    cospec::CollisionReport report;
    cospec::BasePair bp = cospec::discover_base_pair_file(corpus, &report);
    cospec::save_base_pair(bp, cache);
    if (!report_path.empty()) {
        json j;
        j["schema"] = "cospec-discover-v1";
        j["corpus_size"] = report.corpus_size;
        j["classes"] = report_classes(report);
        j["base"] = {{"L", cospec::emit_graph6(bp.L)},
                     {"R", cospec::emit_graph6(bp.R)},
                     {"Tstar", cospec::canonical_form(bp.Tstar)}};
        write_or_print(report_path, j.dump(2) + "\n");
    }
    std::cout << "L " << cospec::emit_graph6(bp.L) << "\n"
              << "R " << cospec::emit_graph6(bp.R) << "\n"
              << "Tstar " << cospec::canonical_form(bp.Tstar) << "\n"
              << "cograph-bearing classes " << report.classes.size() << "\n";
    return 0;
}

int cmd_mate(const std::string& cotree_text, const std::string& cache,
             const std::string& out) {
    require_file(cache);
    cospec::BasePair base = cospec::load_base_pair(cache);
    cospec::Cotree t = cospec::parse_cotree(cotree_text);
    cospec::Graph g = cospec::realize(t);
    cospec::Graph mate = cospec::construct_mate(t, base);

    json j;
    j["schema"] = "cospec-mate-v1";
    j["input"] = cospec::canonical_form(t);
    j["mate_graph6"] = cospec::emit_graph6(mate);
    j["order"] = mate.order();
    j["generalized_cospectral"] =
        cospec::is_generalized_cospectral(g, mate, cospec::SpectrumKind::Adjacency);
    j["induced_p4_in_mate"] = cospec::induced_p4_exists(mate);
    j["induced_p4_in_input"] = cospec::induced_p4_exists(g);
    if (g.order() <= cospec::kCanonicalMaxOrder)
        j["non_isomorphic"] = !cospec::are_isomorphic(g, mate);
    std::cout << cospec::emit_graph6(mate) << "\n";
    write_or_print(out, j.dump(2) + "\n");
    return 0;
}

int cmd_survey(const std::string& family, int n, const std::string& kind_name,
               const std::string& file, int budget, const std::string& format,
               const std::string& report_path) {
    cospec::SpectrumKind kind = kind_name == "q" ? cospec::SpectrumKind::SignlessLaplacian
                                                 : cospec::SpectrumKind::Adjacency;
    if (format == "csv") {
        // fraction table over orders 4..n (threshold family with Q spectra)
        if (family != "threshold" || kind != cospec::SpectrumKind::SignlessLaplacian)
            throw InputError("csv fraction tables require --family threshold --kind q");
        std::string payload = "n,total,with_mate,fraction\n";
        for (int i = 4; i <= n; ++i) {
            cospec::QMateStats st = cospec::q_mate_fraction(i, budget);
            payload += std::to_string(i) + "," + std::to_string(st.total) + "," +
                       std::to_string(st.with_mate) + "," + st.fraction.str() + "\n";
        }
        write_or_print(report_path, payload);
        return 0;
    }

    json j;
    j["schema"] = "cospec-survey-v1";
    j["family"] = family;
    j["kind"] = kind_name;

    if (family == "cographs") {
        if (n >= 13) std::cerr << "surveying " << cospec::count_cographs(n) << " cographs of order "
                               << n << "...\n";
        cospec::DgsSurvey s = cospec::dgs_survey(n, kind, budget);
        j["n"] = n;
        j["total"] = s.total.str();
        j["with_mate_in_family"] = s.with_mate_in_family;
        j["classes"] = report_classes(s.report);
    } else if (family == "threshold") {
        auto graphs = cospec::enumerate_threshold(n);
        j["n"] = n;
        j["total"] = graphs.size();
        cospec::CollisionReport rep;
        if (kind == cospec::SpectrumKind::Adjacency) {
            rep = cospec::find_collision_classes(graphs, kind);
            j["lazzarin_clean"] = rep.classes.empty();
        } else {
            cospec::QMateStats st = cospec::q_mate_fraction(n, budget);
            j["with_mate"] = st.with_mate;
            j["fraction"] = st.fraction.str();
            rep = cospec::find_collision_classes(graphs, kind);
        }
        j["classes"] = report_classes(rep);
    } else if (family == "corpus") {
        require_file(file);
        std::vector<cospec::Graph> corpus;
        for (const auto& line : cospec::read_lines(file))
            corpus.push_back(cospec::parse_graph6(line));
        cospec::CollisionReport rep = cospec::find_collision_classes(corpus, kind);
        j["file"] = file;
        j["total"] = corpus.size();
        j["classes"] = report_classes(rep);
    } else {
        throw InputError("unknown family: " + family);
    }
    write_or_print(report_path, j.dump(2) + "\n");
    return 0;
}

int cmd_gen(int n, const std::string& out) {
    auto lines = cospec::all_graphs_graph6(n);
    if (out.empty()) {
        for (const auto& l : lines) std::cout << l << '\n';
    } else {
        cospec::write_lines(out, lines);
        std::cout << lines.size() << " graphs written to " << out << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& corpus, const std::string& cache) {
    cospec::AcceptanceConfig cfg;
    if (!corpus.empty()) cfg.corpus_path = corpus;
    if (!cache.empty()) cfg.cache_path = cache;
    auto results = cospec::run_acceptance(cfg);
    return cospec::print_acceptance(results) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cograph cospectrality toolkit"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "hierarchy / avoiding / cograph count tables");
    int count_n = 15, count_avoid = 0;
    bool count_cographs_flag = false;
    std::string count_format = "csv", count_out;
    count->add_option("--n", count_n, "table length")->check(CLI::PositiveNumber);
    count->add_option("--avoid", count_avoid, "avoided subhierarchy size m (>= 2)");
    count->add_flag("--cographs", count_cographs_flag, "count cographs instead");
    count->add_option("--format", count_format)->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--out", count_out, "output path (default stdout)");

    // asym
    auto* asym = app.add_subcommand("asym", "radius and growth constant estimates");
    int asym_m = 0, asym_N = 400;
    unsigned asym_prec = 256;
    std::string asym_out;
    asym->add_option("--m", asym_m, "avoidance size (omit for unrestricted)");
    asym->add_option("--precision", asym_prec, "working precision in bits")
        ->check(CLI::Range(64u, 8192u));
    asym->add_option("--N", asym_N, "series truncation order")->check(CLI::PositiveNumber);
    asym->add_option("--out", asym_out, "output path (default stdout)");

    // discover
    auto* discover = app.add_subcommand("discover", "order-9 base-pair discovery");
    std::string disc_corpus, disc_cache = "basepair.txt", disc_report;
    bool disc_force = false;
    discover->add_option("--corpus", disc_corpus, "graph6 file with all order-9 graphs");
    discover->add_option("--cache", disc_cache, "base pair cache path");
    discover->add_option("--report", disc_report, "JSON report path");
    discover->add_flag("--force", disc_force, "ignore an existing cache");

    // mate
    auto* mate = app.add_subcommand("mate", "construct a generalized cospectral mate");
    std::string mate_cotree, mate_cache = "basepair.txt", mate_out;
    mate->add_option("--cotree", mate_cotree, "cotree text")->required();
    mate->add_option("--cache", mate_cache, "base pair cache path");
    mate->add_option("--out", mate_out, "verification record path (default stdout)");

    // survey
    auto* survey = app.add_subcommand("survey", "collision survey over a family");
    std::string survey_family = "cographs", survey_kind = "adjacency", survey_file,
                survey_report;
    int survey_n = 10, survey_budget = 16;
    survey->add_option("--family", survey_family)
        ->check(CLI::IsMember({"cographs", "threshold", "corpus"}));
    survey->add_option("--n", survey_n, "order")->check(CLI::PositiveNumber);
    survey->add_option("--kind", survey_kind)->check(CLI::IsMember({"adjacency", "q"}));
    survey->add_option("--file", survey_file, "corpus file (family=corpus)");
    survey->add_option("--budget", survey_budget, "order budget cap");
    survey->add_option("--report", survey_report, "report path (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit all graphs of order n up to isomorphism");
    int gen_n = 9;
    std::string gen_out;
    gen->add_option("--n", gen_n, "order (<= 9)")->check(CLI::PositiveNumber);
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
    std::string verify_corpus, verify_cache;
    verify->add_option("--corpus", verify_corpus, "order-9 corpus path (generated if absent)");
    verify->add_option("--cache", verify_cache, "base pair cache path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (*count) return cmd_count(count_n, count_avoid, count_cographs_flag, count_format,
                                     count_out);
        if (*asym) return cmd_asym(asym_m, asym_prec, asym_N, asym_out);
        if (*discover) return cmd_discover(disc_corpus, disc_cache, disc_report, disc_force);
        if (*mate) return cmd_mate(mate_cotree, mate_cache, mate_out);
        if (*survey) return cmd_survey(survey_family, survey_n, survey_kind, survey_file,
                                       survey_budget, survey_report);
        if (*gen) return cmd_gen(gen_n, gen_out);
        if (*verify) return cmd_verify(verify_corpus, verify_cache);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const cospec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

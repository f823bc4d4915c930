// secdom: command-line front end for the secure-domination library.
//
// Exit codes: 0 success (verify: every instance passed), 1 verification
// failure or cache recheck mismatch, 2 usage, parse or width-cap error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secdom/canonical.hpp"
#include "secdom/cli/cache.hpp"
#include "secdom/cli/report_io.hpp"
#include "secdom/constructions.hpp"
#include "secdom/domination.hpp"
#include "secdom/graph.hpp"
#include "secdom/graph6.hpp"
#include "secdom/mycielskian.hpp"
#include "secdom/solvers.hpp"
#include "secdom/verify.hpp"

namespace {

using namespace secdom;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Bad input or arguments; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Disagreement between cache and recomputation; maps to exit code 1.
struct RecheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NamedGraph {
    std::string name;
    Graph graph;
};

struct SourceArgs {
    std::string family;
    long n = -1;
    long m = -1;
    std::string graph6;
    std::string file;
    bool use_stdin = false;
    bool mycielskian = false;
};

void add_source_options(CLI::App& cmd, SourceArgs& src) {
    cmd.add_option("--family", src.family, "path | cycle | complete | complete-bipartite | star")
        ->check(CLI::IsMember({"path", "cycle", "complete", "complete-bipartite", "star"}));
    cmd.add_option("--n", src.n, "family order (star: leaf count; complete-bipartite: larger part)");
    cmd.add_option("--m", src.m, "complete-bipartite smaller part");
    cmd.add_option("--graph6", src.graph6, "one graph in graph6");
    cmd.add_option("--file", src.file, "graph6 lines from a file ('#' lines ignored)");
    cmd.add_flag("--stdin", src.use_stdin, "graph6 lines from standard input");
    cmd.add_flag("--mycielskian", src.mycielskian, "replace each input graph by its Mycielskian");
}

std::vector<NamedGraph> read_lines(std::istream& in, const std::string& source) {
    std::vector<NamedGraph> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            auto g = from_graph6(line);
            out.push_back({"g6:" + to_graph6(g), std::move(g)});
        } catch (const Graph6Error& e) {
            throw InputError(source + " line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

Graph build_family(const SourceArgs& src) {
    if (src.n < 1) throw InputError("--family needs --n >= 1");
    const auto n = static_cast<std::size_t>(src.n);
    try {
        if (src.family == "path") return make_path(n);
        if (src.family == "cycle") return make_cycle(n);
        if (src.family == "complete") return make_complete(n);
        if (src.family == "star") return make_star(n);
        if (src.m < 1) throw InputError("complete-bipartite needs --m >= 1");
        return make_complete_bipartite(static_cast<std::size_t>(src.m), n);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string family_name(const SourceArgs& src) {
    if (src.family == "path") return "P_" + std::to_string(src.n);
    if (src.family == "cycle") return "C_" + std::to_string(src.n);
    if (src.family == "complete") return "K_" + std::to_string(src.n);
    if (src.family == "star") return "K_{1," + std::to_string(src.n) + "}";
    return "K_{" + std::to_string(src.m) + "," + std::to_string(src.n) + "}";
}

std::vector<NamedGraph> load_graphs(const SourceArgs& src) {
    const int given = !src.family.empty() + !src.graph6.empty() + !src.file.empty() + src.use_stdin;
    if (given != 1) throw InputError("give exactly one of --family, --graph6, --file, --stdin");
    std::vector<NamedGraph> graphs;
    if (!src.family.empty()) {
        graphs.push_back({family_name(src), build_family(src)});
    } else if (!src.graph6.empty()) {
        try {
            auto g = from_graph6(src.graph6);
            graphs.push_back({"g6:" + to_graph6(g), std::move(g)});
        } catch (const Graph6Error& e) {
            throw InputError(std::string("--graph6 argument: ") + e.what());
        }
    } else if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in) throw InputError("cannot open " + src.file);
        graphs = read_lines(in, src.file);
    } else {
        graphs = read_lines(std::cin, "stdin");
    }
    if (src.mycielskian) {
        for (auto& ng : graphs) {
            try {
                ng.graph = mycielski_graph(ng.graph);
            } catch (const std::invalid_argument& e) {
                throw InputError(ng.name + ": " + e.what());
            }
            ng.name = "mu(" + ng.name + ")";
        }
    }
    return graphs;
}

// ----------------------------------------------------------------- compute

struct CacheArgs {
    std::string dir;
    bool disabled = false;
    bool recheck = false;
};

void add_cache_options(CLI::App& cmd, CacheArgs& c) {
    cmd.add_option("--cache-dir", c.dir, std::string("result cache directory (default $") + cli::kCacheDirEnv + ")");
    cmd.add_flag("--no-cache", c.disabled, "ignore the result cache");
    cmd.add_flag("--recheck", c.recheck, "recompute cache hits and fail on disagreement");
}

std::optional<cli::RunCache> open_cache(const CacheArgs& c) {
    if (c.disabled) return std::nullopt;
    auto dir = cli::resolve_cache_dir(c.dir);
    if (dir.empty()) return std::nullopt;
    return cli::RunCache(dir);
}

SolveResult solve_cached(const Graph& g, Parameter kind, const SolveOptions& opts, std::optional<cli::RunCache>& cache,
                         bool recheck) {
    if (!cache) return solve(g, kind, opts);
    const auto key = cli::cache_key(g);
    if (auto hit = cache->find(key.key, kind)) {
        SolveResult r{kind, hit->value, {}, true, 0};
        for (Vertex p : hit->witness) r.witness.insert(key.to_query[p]);
        if (recheck) {
            const auto fresh = solve(g, kind, opts);
            if (fresh.value != r.value)
                throw RecheckError("cache recheck: cached " + std::string(to_string(kind)) + "=" +
                                   std::to_string(r.value) + " but recomputed " + std::to_string(fresh.value));
        }
        const bool valid = r.witness.size() == r.value &&
                           (kind == Parameter::domination ? is_dominating(g, r.witness) : is_secure(g, r.witness));
        if (valid) return r;
        std::cerr << "warning: discarding invalid cache record for " << key.key << "\n";
    }
    const auto start = std::chrono::steady_clock::now();
    const auto r = solve(g, kind, opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    cli::RunRecord rec{key.key, kind, r.value, {}, std::string(cli::kSolverVersion), ms};
    for (Vertex p = 0; p < key.to_query.size(); ++p)
        if (r.witness.contains(key.to_query[p])) rec.witness.insert(p);
    cache->append(rec);
    return r;
}

int cmd_compute(const SourceArgs& src, const std::string& param, bool as_json, bool certificate, unsigned threads,
                const CacheArgs& cache_args) {
    auto graphs = load_graphs(src);
    auto cache = open_cache(cache_args);
    std::vector<Parameter> kinds;
    if (param == "gamma" || param == "both") kinds.push_back(Parameter::domination);
    if (param == "gamma_s" || param == "both") kinds.push_back(Parameter::secure_domination);
    const SolveOptions opts{threads};

    for (const auto& [name, g] : graphs) {
        json results = json::array();
        std::ostringstream text;
        text << name << " order=" << g.order() << " size=" << g.size() << "\n";
        for (auto kind : kinds) {
            const auto r = solve_cached(g, kind, opts, cache, cache_args.recheck);
            json entry{{"parameter", to_string(kind)},
                       {"value", r.value},
                       {"witness", cli::to_json(r.witness)},
                       {"exhausted_below", r.exhausted_below}};
            text << to_string(kind) << " = " << r.value << " witness=" << r.witness.to_string() << "\n";
            if (kind == Parameter::secure_domination) {
                const auto cert = is_secure_dominating(g, r.witness);
                if (!cert || !replay_certificate(g, *cert)) throw std::logic_error("witness failed certificate replay");
                json defenses = json::array();
                for (const auto& [u, d] : cert->defenses) defenses.push_back({{"attacker", u}, {"defender", d}});
                entry["certificate"] = defenses;
                if (certificate)
                    for (const auto& [u, d] : cert->defenses) text << "  attack " << u << " <- defender " << d << "\n";
            }
            results.push_back(entry);
        }
        if (as_json) {
            json out{{"schema", cli::kComputeSchema},
                     {"graph", {{"name", name}, {"graph6", to_graph6(g)}, {"order", g.order()}, {"size", g.size()}}},
                     {"results", results}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << text.str();
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- transforms

int cmd_mycielskian(SourceArgs src) {
    src.mycielskian = true;
    for (const auto& ng : load_graphs(src)) std::cout << to_graph6(ng.graph) << "\n";
    return kExitOk;
}

int cmd_construct(const std::string& kind, long k, long a, long b, bool as_json) {
    std::optional<Construction> c;
    try {
        if (kind == "gap-positive") c = construct_gap_positive(k);
        else if (kind == "gap-nonneg") c = construct_gap_nonnegative(k);
        else c = construct_prescribed(a, b);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto& spec = c->spec;
    if (as_json) {
        json out{{"schema", cli::kConstructSchema},
                 {"kind", to_string(spec.kind)},
                 {"family", spec.family},
                 {"graph6", to_graph6(c->graph)},
                 {"order", c->graph.order()},
                 {"expected", {{"gamma_s", spec.expected_gamma_s}, {"gamma_s_mu", spec.expected_gamma_s_mu}}}};
        if (spec.kind == ConstructionKind::prescribed_values) {
            out["params"] = {{"a", spec.a}, {"b", spec.b}};
        } else {
            out["params"] = {{"k", spec.k}};
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_graph6(c->graph) << "\n"
                  << "# " << spec.family << " expected gamma_s=" << spec.expected_gamma_s
                  << " gamma_s(mu)=" << spec.expected_gamma_s_mu << "\n";
    }
    return kExitOk;
}

int cmd_generate(const std::string& kind, long n, double p, long count, unsigned long long seed, bool connected) {
    if (n < 1) throw InputError("--n must be >= 1");
    try {
        if (kind == "all") {
            for (const auto& g : enumerate_graphs(static_cast<std::size_t>(n), connected)) std::cout << to_graph6(g) << "\n";
        } else {
            std::mt19937_64 rng(seed);
            for (long i = 0; i < count; ++i) std::cout << to_graph6(make_random(static_cast<std::size_t>(n), p, rng)) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify

void emit_reports(const std::vector<verify::TheoremReport>& reports, const std::string& format) {
    if (format == "json") std::cout << cli::reports_json(reports).dump(2) << "\n";
    else if (format == "csv") cli::write_csv(std::cout, reports);
    else cli::write_table(std::cout, reports);
}

struct VerifyArgs {
    std::string id;
    std::optional<long> lo, hi;
    std::optional<long> n_min, n_max, sum_max, k_min, k_max, a_min, a_max;
    bool override_caps = false;
    unsigned threads = 1;
    std::string format = "table";
};

verify::RunOptions run_options(verify::TheoremId id, const VerifyArgs& v) {
    verify::RunOptions o;
    o.lo = v.lo;
    o.hi = v.hi;
    o.override_caps = v.override_caps;
    o.threads = v.threads;
    auto pick = [&](std::optional<long> a, std::optional<long> b) { return a ? a : b; };
    switch (verify::limits(id).axis) {
        case verify::Axis::order: o.lo = pick(v.n_min, o.lo); o.hi = pick(v.n_max, o.hi); break;
        case verify::Axis::sum: o.hi = pick(v.sum_max, o.hi); break;
        case verify::Axis::k: o.lo = pick(v.k_min, o.lo); o.hi = pick(v.k_max, o.hi); break;
        case verify::Axis::a: o.lo = pick(v.a_min, o.lo); o.hi = pick(v.a_max, o.hi); break;
    }
    return o;
}

int cmd_verify(const VerifyArgs& v) {
    std::vector<verify::TheoremId> ids;
    if (v.id == "all") {
        ids.assign(verify::kTheorems.begin(), verify::kTheorems.end());
    } else {
        auto id = verify::parse_theorem_id(v.id);
        if (!id || *id >= verify::TheoremId::FW1) throw InputError("unknown theorem id '" + v.id + "'");
        ids.push_back(*id);
    }
    std::vector<verify::TheoremReport> all;
    for (auto id : ids) {
        std::vector<verify::TheoremReport> reports;
        try {
            reports = verify::run_theorem(id, run_options(id, v));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        all.insert(all.end(), reports.begin(), reports.end());
    }
    emit_reports(all, v.format);
    return verify::count_failures(all) == 0 ? kExitOk : kExitFail;
}

int cmd_survey(const SourceArgs& src, long enumerate_n, bool connected, unsigned threads, const std::string& format) {
    std::vector<Graph> graphs;
    if (enumerate_n > 0) {
        try {
            graphs = enumerate_graphs(static_cast<std::size_t>(enumerate_n), connected);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    } else {
        for (auto& ng : load_graphs(src)) graphs.push_back(std::move(ng.graph));
    }
    emit_reports(verify::survey_conjectures(graphs, {threads}), format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secure domination on graphs and their Mycielskians"};
    app.require_subcommand(1);

    SourceArgs compute_src;
    std::string param = "both";
    bool compute_json = false, certificate = false;
    unsigned threads = 1;
    CacheArgs cache_args;
    auto* compute = app.add_subcommand("compute", "compute gamma and/or gamma_s with witnesses");
    add_source_options(*compute, compute_src);
    compute->add_option("--param", param, "gamma | gamma_s | both")->check(CLI::IsMember({"gamma", "gamma_s", "both"}));
    compute->add_flag("--json", compute_json, "one JSON object per graph");
    compute->add_flag("--certificate", certificate, "print the defender of every attacked vertex");
    compute->add_option("--threads", threads, "solver worker threads (0 = all cores)");
    add_cache_options(*compute, cache_args);

    SourceArgs myc_src;
    auto* myc = app.add_subcommand("mycielskian", "emit the Mycielskian of each input graph as graph6");
    add_source_options(*myc, myc_src);

    std::string construct_kind;
    long k = -1, a = -1, b = -1;
    bool construct_json = false;
    auto* construct = app.add_subcommand("construct", "build a graph realising prescribed parameters");
    construct->add_option("kind", construct_kind, "gap-positive | gap-nonneg | prescribed")
        ->required()
        ->check(CLI::IsMember({"gap-positive", "gap-nonneg", "prescribed"}));
    construct->add_option("--k", k, "gap for gap-positive / gap-nonneg");
    construct->add_option("--a", a, "gamma_s(G) for prescribed");
    construct->add_option("--b", b, "gamma_s(mu(G)) for prescribed");
    construct->add_flag("--json", construct_json, "JSON output");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "check a theorem over its instance range");
    ver->add_option("id", va.id, "T1 T2 L5 C6 T7 T8 P9 P10 L12 P13 P14 C15 P16 T17 T19 T20 GAP+ GAP0 T22 | all")
        ->required();
    ver->add_option("--min", va.lo, "lower end of the range on the theorem's axis");
    ver->add_option("--max", va.hi, "upper end of the range on the theorem's axis");
    ver->add_option("--n-min", va.n_min);
    ver->add_option("--n-max", va.n_max);
    ver->add_option("--sum-max", va.sum_max, "largest m+n for T19/T20");
    ver->add_option("--k-min", va.k_min);
    ver->add_option("--k-max", va.k_max);
    ver->add_option("--a-min", va.a_min);
    ver->add_option("--a-max", va.a_max);
    ver->add_flag("--override", va.override_caps, "allow ranges beyond the feasibility caps");
    ver->add_option("--threads", va.threads, "instances evaluated concurrently (0 = all cores)");
    ver->add_option("--format", va.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));

    SourceArgs survey_src;
    long survey_enum = 0;
    bool survey_connected = false;
    unsigned survey_threads = 1;
    std::string survey_format = "csv";
    auto* survey = app.add_subcommand("survey", "evidence table for the open questions");
    add_source_options(*survey, survey_src);
    survey->add_option("--enumerate", survey_enum, "survey every graph of this order instead of reading input");
    survey->add_flag("--connected", survey_connected, "with --enumerate, connected graphs only");
    survey->add_option("--threads", survey_threads);
    survey->add_option("--format", survey_format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));

    std::string gen_kind;
    long gen_n = -1, gen_count = 1;
    double gen_p = 0.5;
    unsigned long long gen_seed = 20240611ULL;
    bool gen_connected = false;
    auto* gen = app.add_subcommand("generate", "emit graph6 streams");
    gen->add_option("kind", gen_kind, "all | random")->required()->check(CLI::IsMember({"all", "random"}));
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_flag("--connected", gen_connected, "all: connected graphs only");
    gen->add_option("--p", gen_p, "random: edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--count", gen_count, "random: number of graphs");
    gen->add_option("--seed", gen_seed, "random: RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(compute_src, param, compute_json, certificate, threads, cache_args);
        if (*myc) return cmd_mycielskian(myc_src);
        if (*construct) return cmd_construct(construct_kind, k, a, b, construct_json);
        if (*ver) return cmd_verify(va);
        if (*survey) {
            if (survey_enum > 0) return cmd_survey(survey_src, survey_enum, survey_connected, survey_threads, survey_format);
            return cmd_survey(survey_src, 0, false, survey_threads, survey_format);
        }
        if (*gen) return cmd_generate(gen_kind, gen_n, gen_p, gen_count, gen_seed, gen_connected);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RecheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

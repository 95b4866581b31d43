// kstab: generate, solve, verify and benchmark k-stable set instances.

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "kstab/exact_oracle.hpp"
#include "kstab/families.hpp"
#include "kstab/json_io.hpp"
#include "kstab/outerpath_solver.hpp"
#include "kstab/outerplanar_solver.hpp"
#include "kstab/planar_greedy.hpp"
#include "kstab/rng.hpp"

using namespace kstab;
using nlohmann::json;

namespace {

GraphRecord record_of_family(const FamilyInstance& inst, uint64_t seed, bool has_seed) {
    GraphRecord rec;
    rec.graph = inst.graph;
    if (!inst.outer_order.empty()) rec.outer_order = inst.outer_order;
    json meta;
    meta["family"] = inst.family_id;
    meta["n"] = inst.n;
    meta["k"] = inst.k;
    meta["h"] = inst.h;
    meta["claimed_upper_bound"] = inst.claimed_upper_bound.str();
    if (!inst.fillers.empty()) meta["fillers"] = inst.fillers;
    if (has_seed) meta["seed"] = seed;
    rec.meta_json = meta.dump();
    return rec;
}

GraphRecord record_of_outerplane(const OuterplaneGraph& og, const std::string& family, uint64_t seed) {
    GraphRecord rec;
    std::vector<Edge> edges;
    for (auto [a, b] : og.graph().edge_list())
        edges.emplace_back(og.label(a), og.label(b));
    rec.graph = Graph::from_edges(og.n(), edges);
    rec.outer_order = og.labels();
    rec.chords = og.chords();
    json meta;
    meta["family"] = family;
    meta["n"] = og.n();
    meta["seed"] = seed;
    rec.meta_json = meta.dump();
    return rec;
}

FamilyInstance make_family(const std::string& family, int n, int k, uint64_t seed) {
    if (family == "outerpath-ub") return gen_outerpath_ub(n, k);
    if (family == "planar-ub-a") return gen_planar_ub_a(n, k);
    if (family == "planar-ub-b") return gen_planar_ub_b(n, k);
    if (family == "greedy-adv") return gen_greedy_adversary(n);
    if (family == "rand-tri") {
        FamilyInstance inst;
        inst.family_id = family;
        inst.n = n;
        inst.k = k;
        inst.graph = random_planar_triangulation(n, seed);
        inst.claimed_upper_bound = Rational(n);
        return inst;
    }
    throw ConfigError("unknown family: " + family);
}

GraphRecord generate(const std::string& family, int n, int k, uint64_t seed) {
    if (family == "rand-mop") return record_of_outerplane(random_maximal_outerplanar(n, seed), family, seed);
    if (family == "rand-outerpath")
        return record_of_outerplane(random_maximal_outerpath(n, seed), family, seed);
    bool has_seed = family == "rand-tri";
    return record_of_family(make_family(family, n, k, seed), seed, has_seed);
}

OuterplaneGraph embed(const GraphRecord& rec) {
    if (!rec.outer_order) throw ConfigError("input lacks outer_order; not usable as outerplanar");
    return complete_to_maximal(rec.graph, *rec.outer_order);
}

struct SolveOptions {
    std::string alg = "outerplanar";
    std::string strategy = "best";
    std::string tiebreak = "low";
    int k = 3;
};

Certificate run_solver(const GraphRecord& rec, const SolveOptions& opt, std::string* trace_out) {
    if (opt.alg == "outerpath") {
        Certificate c = solve_outerpath(embed(rec), opt.k);
        if (trace_out) trace_out->clear();
        return c;
    }
    if (opt.alg == "outerplanar") {
        OuterplanarRun run = solve_outerplanar_traced(embed(rec), opt.k);
        if (trace_out) *trace_out = trace_to_jsonl(run.trace);
        return run.certificate;
    }
    if (opt.alg == "greedy") {
        Strategy s = opt.strategy == "plain"    ? Strategy::Plain
                     : opt.strategy == "domset" ? Strategy::DominatingSet
                                                : Strategy::Best;
        Tiebreak t = opt.tiebreak == "adversarial" ? Tiebreak::Adversarial : Tiebreak::LowestId;
        auto [c, trace] = greedy_removal(rec.graph, opt.k, s, t);
        if (trace_out) *trace_out = removal_trace_to_jsonl(trace);
        return c;
    }
    throw ConfigError("unknown algorithm: " + opt.alg);
}

int threads_from_env() {
    const char* env = std::getenv("KSTAB_THREADS");
    if (env) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---- sweep ----

struct SweepJob {
    std::string family;
    int n;
    int k;
    uint64_t seed;
    std::string alg;
    size_t index;
};

struct SweepRow {
    std::string instance_id;
    int n;
    long long m;
    int k;
    std::string alg;
    int achieved;
    Rational guaranteed;
    std::string oracle;  // empty when not run
    long long runtime_ms;
    bool ok;
};

int cmd_sweep(const std::string& config_path, const std::string& out_path, bool timing,
              const std::string& artifacts_dir) {
    json cfg;
    try {
        cfg = json::parse(read_file(config_path));
    } catch (const std::exception& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return 3;
    }
    auto require = [&](const char* field) {
        if (!cfg.contains(field)) throw ConfigError(std::string("config missing field: ") + field);
    };
    require("family");
    require("n");
    require("k");
    require("algorithms");
    std::string family = cfg["family"].get<std::string>();
    std::vector<int> ns = cfg["n"].is_array() ? cfg["n"].get<std::vector<int>>()
                                              : std::vector<int>{cfg["n"].get<int>()};
    std::vector<int> ks = cfg["k"].is_array() ? cfg["k"].get<std::vector<int>>()
                                              : std::vector<int>{cfg["k"].get<int>()};
    std::vector<std::string> algs = cfg["algorithms"].get<std::vector<std::string>>();
    uint64_t master_seed = cfg.value("master_seed", 0ULL);
    int seed_count = cfg.value("seeds", 1);
    bool with_oracle = cfg.value("oracle", false);

    std::vector<SweepJob> jobs;
    uint64_t counter = 0;
    for (int n : ns)
        for (int k : ks)
            for (int s = 0; s < seed_count; ++s)
                for (const auto& alg : algs) {
                    SweepJob j;
                    j.family = family;
                    j.n = n;
                    j.k = k;
                    j.seed = derive_seed(master_seed, counter);
                    j.alg = alg;
                    j.index = jobs.size();
                    jobs.push_back(j);
                    ++counter;
                }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const SweepJob& j = jobs[i];
            auto t0 = std::chrono::steady_clock::now();
            GraphRecord rec = generate(j.family, j.n, j.k, j.seed);
            SolveOptions opt;
            opt.alg = j.alg;
            opt.k = j.k;
            Certificate c = run_solver(rec, opt, nullptr);
            SweepRow& r = rows[i];
            std::ostringstream id;
            id << j.family << "-n" << j.n << "-k" << j.k << "-s" << j.seed << "-" << j.alg;
            r.instance_id = id.str();
            r.n = rec.graph.n();
            r.m = rec.graph.m();
            r.k = j.k;
            r.alg = j.alg;
            r.achieved = c.achieved_size;
            r.guaranteed = c.guaranteed_size;
            r.ok = verify_kstable(rec.graph, c.set, j.k) && c.achieved_size >= c.guaranteed_size.ceil();
            if (with_oracle) {
                auto [opt_set, stats] = exact_max_kstable(rec.graph, j.k);
                r.oracle = stats.proven_optimal ? std::to_string(opt_set.size()) : "?";
                if (stats.proven_optimal) r.ok = r.ok && c.achieved_size <= opt_set.size();
            }
            r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
            if (!artifacts_dir.empty()) {
                write_file(artifacts_dir + "/" + r.instance_id + ".graph.json", serialize_graph(rec));
                write_file(artifacts_dir + "/" + r.instance_id + ".cert.json", serialize_certificate(c));
            }
        }
    };
    int nthreads = threads_from_env();
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "instance_id,n,m,k,algorithm,achieved,guaranteed,ratio_ok,oracle";
    if (timing) csv << ",runtime_ms";
    csv << "\n";
    bool all_ok = true;
    std::map<std::pair<std::string, int>, Rational> min_ratio;
    for (const auto& r : rows) {
        csv << r.instance_id << "," << r.n << "," << r.m << "," << r.k << "," << r.alg << ","
            << r.achieved << "," << r.guaranteed.str() << "," << (r.ok ? "yes" : "no") << ","
            << r.oracle;
        if (timing) csv << "," << r.runtime_ms;
        csv << "\n";
        all_ok = all_ok && r.ok;
        Rational ratio(r.achieved, std::max(1, r.n));
        auto key = std::make_pair(family + "/" + r.alg, r.k);
        auto it = min_ratio.find(key);
        if (it == min_ratio.end() || ratio < it->second) min_ratio[key] = ratio;
    }
    for (const auto& [key, ratio] : min_ratio)
        csv << "SUMMARY," << key.first << ",k=" << key.second << ",min_ratio=" << ratio.str() << ",,,,"
            << (timing ? "," : "") << "\n";
    if (out_path.empty() || out_path == "-")
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-stable set toolkit: bounded-degree induced subgraphs of outerplanar and planar graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family or random instance");
    std::string gen_family, gen_out;
    int gen_n = 12, gen_k = 3;
    uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family,
                    "outerpath-ub|planar-ub-a|planar-ub-b|greedy-adv|rand-mop|rand-outerpath|rand-tri")
        ->required();
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--k", gen_k);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver on a graph file");
    SolveOptions sopt;
    std::string solve_in, solve_out, solve_trace;
    solve->add_option("--alg", sopt.alg, "outerpath|outerplanar|greedy")->required();
    solve->add_option("--k", sopt.k)->required();
    solve->add_option("--strategy", sopt.strategy, "plain|domset|best (greedy only)");
    solve->add_option("--tiebreak", sopt.tiebreak, "low|adversarial (greedy only)");
    solve->add_option("--in", solve_in)->required();
    solve->add_option("--out", solve_out, "certificate file (default stdout)");
    solve->add_option("--trace", solve_trace, "write per-step trace as JSON lines");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact search");
    std::string oracle_what = "kstable", oracle_in, oracle_out;
    int oracle_k = 3;
    long long oracle_nodes = 10'000'000, oracle_ms = 60'000;
    oracle->add_option("--what", oracle_what, "kstable|domset");
    oracle->add_option("--k", oracle_k);
    oracle->add_option("--in", oracle_in)->required();
    oracle->add_option("--out", oracle_out);
    oracle->add_option("--node-limit", oracle_nodes);
    oracle->add_option("--time-limit-ms", oracle_ms);

    // verify
    auto* verify = app.add_subcommand("verify", "check a set/certificate against a graph");
    std::string verify_graph, verify_set;
    int verify_k = -1;
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("set", verify_set)->required();
    verify->add_option("--k", verify_k, "override k (defaults to certificate k)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run an experiment config, emit CSV");
    std::string sweep_cfg, sweep_out, sweep_artifacts;
    bool sweep_timing = false;
    sweep->add_option("--config", sweep_cfg)->required();
    sweep->add_option("--out", sweep_out, "CSV path (default stdout)");
    sweep->add_flag("--timing", sweep_timing, "include runtime_ms column (breaks replay identity)");
    sweep->add_option("--artifacts", sweep_artifacts, "directory for per-row graph/cert JSON");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "graph file to DOT");
    std::string dot_in, dot_out;
    dot->add_option("--in", dot_in)->required();
    dot->add_option("--out", dot_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            GraphRecord rec = generate(gen_family, gen_n, gen_k, gen_seed);
            std::string text = serialize_graph(rec);
            if (gen_out.empty())
                std::cout << text;
            else
                write_file(gen_out, text);
            return 0;
        }
        if (solve->parsed()) {
            GraphRecord rec = parse_graph(read_file(solve_in));
            std::string trace;
            Certificate c = run_solver(rec, sopt, &trace);
            std::string text = serialize_certificate(c);
            if (solve_out.empty())
                std::cout << text;
            else
                write_file(solve_out, text);
            if (!solve_trace.empty()) write_file(solve_trace, trace);
            return 0;
        }
        if (oracle->parsed()) {
            GraphRecord rec = parse_graph(read_file(oracle_in));
            SearchBudget budget;
            budget.node_limit = oracle_nodes;
            budget.time_limit_ms = oracle_ms;
            json out;
            if (oracle_what == "kstable") {
                auto [set, stats] = exact_max_kstable(rec.graph, oracle_k, budget);
                out["set"] = set.ids();
                out["k"] = oracle_k;
                out["stats"] = {{"nodes_expanded", stats.nodes_expanded},
                                {"best_size", stats.best_size},
                                {"proven_optimal", stats.proven_optimal},
                                {"time_ms", stats.time_ms}};
            } else if (oracle_what == "domset") {
                auto [set, stats] = exact_min_dominating(rec.graph, budget);
                out["set"] = set.ids();
                out["stats"] = {{"nodes_expanded", stats.nodes_expanded},
                                {"best_size", stats.best_size},
                                {"proven_optimal", stats.proven_optimal},
                                {"time_ms", stats.time_ms}};
            } else {
                std::cerr << "unknown oracle target: " << oracle_what << "\n";
                return 3;
            }
            std::string text = out.dump(2) + "\n";
            if (oracle_out.empty())
                std::cout << text;
            else
                write_file(oracle_out, text);
            return 0;
        }
        if (verify->parsed()) {
            GraphRecord rec = parse_graph(read_file(verify_graph));
            std::string set_text = read_file(verify_set);
            json j = json::parse(set_text);
            VertexSet set;
            bool has_cert = j.contains("guaranteed_size");
            Certificate cert;
            if (has_cert) {
                cert = parse_certificate(set_text);
                set = cert.set;
                if (verify_k < 0) verify_k = cert.k;
            } else {
                set = parse_vertex_set(set_text);
            }
            if (verify_k < 0) {
                std::cerr << "no k given and no certificate to take it from\n";
                return 3;
            }
            if (!verify_kstable(rec.graph, set, verify_k)) {
                std::cerr << "FAIL: set induces degree > " << verify_k << "\n";
                return 1;
            }
            if (has_cert && cert.achieved_size < cert.guaranteed_size.ceil()) {
                std::cerr << "FAIL: certificate guarantee " << cert.guaranteed_size.str()
                          << " exceeds achieved size " << cert.achieved_size << "\n";
                return 2;
            }
            if (has_cert && cert.achieved_size != set.size()) {
                std::cerr << "FAIL: achieved_size does not match the set\n";
                return 2;
            }
            std::cout << "OK\n";
            return 0;
        }
        if (sweep->parsed()) return cmd_sweep(sweep_cfg, sweep_out, sweep_timing, sweep_artifacts);
        if (dot->parsed()) {
            GraphRecord rec = parse_graph(read_file(dot_in));
            std::string text = to_dot(rec);
            if (dot_out.empty())
                std::cout << text;
            else
                write_file(dot_out, text);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

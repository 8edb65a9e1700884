// critset: exact independence-theoretic invariants of small graphs.
//
// Subcommands:
//   compute  alpha, core/corona, critical difference, ker/diadem/nucleus,
//            odd-cycle counts, and the inequality chain, as one JSON object
//   verify   run the constructive-lemma sweep and the chain checks
//   search   stream a graph corpus through the chain verifier, storing
//            witnesses and resumable checkpoints
//   dot      render a graph with invariant sets highlighted
//
// Exit codes: 0 ok, 1 usage/parse error, 2 budget exhausted (partial result
// emitted), 3 internal invariant violation (a proven theorem failed: a bug).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critset/critset.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvariant = 3;

struct InputOptions {
    std::string g6;
    std::string edges_path;
    std::string g6_file;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, bool allow_file = true) {
    auto* a = cmd->add_option("--g6", in.g6, "graph6 string");
    auto* b = cmd->add_option("--edges", in.edges_path, "edge-list file (first line n, then 'u v')");
    a->excludes(b);
    b->excludes(a);
    if (allow_file) {
        auto* c = cmd->add_option("--g6-file", in.g6_file, "file with one graph6 string per line");
        c->excludes(a);
        c->excludes(b);
        a->excludes(c);
        b->excludes(c);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw critset::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Graphs named by the input flags; singleton unless --g6-file was given.
std::vector<std::pair<std::string, critset::Graph>> load_graphs(const InputOptions& in) {
    std::vector<std::pair<std::string, critset::Graph>> out;
    if (!in.g6.empty()) {
        out.emplace_back(in.g6, critset::parse_graph6(in.g6));
    } else if (!in.edges_path.empty()) {
        critset::Graph g = critset::parse_edge_list(read_file(in.edges_path));
        out.emplace_back(critset::encode_graph6(g), std::move(g));
    } else if (!in.g6_file.empty()) {
        for (const auto& line : critset::detail::read_g6_lines(in.g6_file))
            out.emplace_back(line, critset::parse_graph6(line));
    } else {
        throw CLI::ValidationError("input", "one of --g6 / --edges / --g6-file is required");
    }
    return out;
}

struct BudgetFlags {
    uint64_t mis = 1'000'000;
    uint64_t critical = 1'000'000;
    uint64_t cycles = 1'000'000;
    critset::Budgets to_budgets() const { return {mis, critical, cycles}; }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--budget-mis", b.mis, "maximum independent sets to enumerate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-critical", b.critical, "critical independent sets to enumerate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-cycles", b.cycles, "cycles to enumerate")
        ->check(CLI::PositiveNumber);
}

nlohmann::json compute_bundle(const critset::Graph& g, const critset::Budgets& budgets,
                              bool& partial) {
    critset::OmegaSummary om = critset::omega_summary(g, budgets.mis);
    critset::CriticalReport cr = critset::critical_summary(g, budgets.critical);
    critset::CycleInventory inv = critset::cycle_inventory(g, budgets.cycles);
    critset::ChainReport chain = critset::chain_report(g, budgets);
    partial = partial || !om.mis_enumeration_complete || !cr.complete || !inv.exhausted ||
              !chain.complete();
    return nlohmann::json{{"chain", chain},
                          {"critical", cr},
                          {"cycles", inv},
                          {"graph", {{"edge_count", g.edge_count()}, {"n", g.vertex_count()}}},
                          {"omega", om}};
}

void print_pretty(const nlohmann::json& bundle) {
    auto row = [](const std::string& k, const std::string& v) {
        std::cout << "  " << k;
        for (size_t i = k.size(); i < 18; ++i) std::cout << ' ';
        std::cout << v << "\n";
    };
    const auto& om = bundle.at("omega");
    const auto& cr = bundle.at("critical");
    const auto& cy = bundle.at("cycles");
    const auto& ch = bundle.at("chain");
    std::cout << "graph            n=" << bundle.at("graph").at("n")
              << " m=" << bundle.at("graph").at("edge_count") << "\n";
    row("alpha", om.at("alpha").dump());
    row("core", om.at("core").dump());
    row("corona", om.at("corona").dump());
    if (om.contains("mis_count")) row("mis_count", om.at("mis_count").dump());
    row("d", cr.at("d").dump());
    if (cr.at("complete").get<bool>()) {
        row("ker", cr.at("ker").dump());
        row("diadem", cr.at("diadem").dump());
        row("nucleus", cr.at("nucleus").dump());
        row("critical_count", cr.at("critical_count").dump());
    } else {
        row("critical", "budget exceeded");
    }
    row("k_distinct", cy.at("k_distinct").dump() + (cy.at("exhausted").get<bool>() ? "" : " (partial)"));
    row("odd_cycles", cy.at("odd_cycle_total").dump());
    row("is_ke", ch.at("is_ke").dump());
    std::cout << "  chain            " << ch.at("lower").dump() << " <= " << ch.at("mid").dump()
              << " <= " << ch.at("upper").dump() << " <= " << ch.at("bound").dump() << "\n";
    row("tags", ch.at("equality_tags").dump());
}

int cmd_compute(const InputOptions& in, const BudgetFlags& budgets, bool pretty) {
    bool partial = false;
    for (const auto& [name, g] : load_graphs(in)) {
        nlohmann::json bundle = compute_bundle(g, budgets.to_budgets(), partial);
        if (pretty)
            print_pretty(bundle);
        else
            std::cout << bundle.dump() << "\n";
    }
    return partial ? kExitBudget : kExitOk;
}

int cmd_verify(const InputOptions& in, const BudgetFlags& budgets, uint64_t sample, uint64_t seed) {
    auto graphs = load_graphs(in);
    uint64_t pairs = 0;
    nlohmann::json failures = nlohmann::json::array();
    bool partial = false;

    std::optional<nlohmann::json> single;
    for (const auto& [name, g] : graphs) {
        critset::ChainReport chain = critset::chain_report(g, budgets.to_budgets());
        critset::LemmaReport lemmas =
            critset::verify_constructive_lemmas(g, sample, seed, budgets.to_budgets());
        pairs += lemmas.pairs_checked;
        partial = partial || !lemmas.coverage_complete || !chain.complete();
        for (const auto& f : lemmas.failures)
            failures.push_back(nlohmann::json{{"graph6", name}, {"lemma", f.lemma}, {"witness", f.witness}});
        if (graphs.size() == 1) single = nlohmann::json{{"chain", chain}, {"lemmas", lemmas}};
    }

    if (single) {
        std::cout << single->dump() << "\n";
    } else {
        nlohmann::json out{{"failures", failures}, {"graphs", graphs.size()}, {"pairs_checked", pairs}};
        std::cout << out.dump() << "\n";
    }
    if (!failures.empty()) return kExitInvariant;
    return partial ? kExitBudget : kExitOk;
}

int cmd_dot(const InputOptions& in, const std::string& show) {
    auto graphs = load_graphs(in);
    for (const auto& [name, g] : graphs) {
        std::vector<std::pair<critset::VertexSet, std::string>> highlights;
        if (!show.empty()) {
            critset::OmegaSummary om;
            critset::CriticalReport cr;
            bool need_omega = show.find("core") != std::string::npos ||
                              show.find("corona") != std::string::npos;
            bool need_critical = show.find("ker") != std::string::npos ||
                                 show.find("diadem") != std::string::npos ||
                                 show.find("nucleus") != std::string::npos;
            if (need_omega) om = critset::omega_summary(g);
            if (need_critical) {
                cr = critset::critical_summary(g, 1'000'000);
                if (!cr.complete)
                    throw critset::BudgetExhausted("dot: critical enumeration budget exhausted");
            }
            std::stringstream ss(show);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "core") highlights.emplace_back(om.core, "core");
                else if (item == "corona") highlights.emplace_back(om.corona, "corona");
                else if (item == "ker") highlights.emplace_back(*cr.ker, "ker");
                else if (item == "diadem") highlights.emplace_back(*cr.diadem, "diadem");
                else if (item == "nucleus") highlights.emplace_back(*cr.nucleus, "nucleus");
                else throw CLI::ValidationError("--show", "unknown set '" + item + "'");
            }
        }
        std::cout << critset::to_dot(g, highlights);
    }
    return kExitOk;
}

int cmd_search(critset::SearchConfig cfg) {
    critset::SearchSummary sum = critset::run_search(cfg);
    std::cout << nlohmann::json(sum).dump() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact core/corona/ker/diadem/nucleus invariants and the"
                 " independence inequality chain"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "invariants of one graph (or a g6 file) as JSON");
    InputOptions compute_in;
    BudgetFlags compute_budgets;
    bool pretty = false;
    add_input_flags(compute, compute_in);
    add_budget_flags(compute, compute_budgets);
    compute->add_flag("--pretty", pretty, "aligned table instead of JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "check the proven lemmas and inequalities");
    InputOptions verify_in;
    BudgetFlags verify_budgets;
    uint64_t sample = 200, seed = 1;
    add_input_flags(verify, verify_in);
    add_budget_flags(verify, verify_budgets);
    verify->add_option("--sample", sample, "sampled pairs per lemma family when not exhaustive")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "sampling seed");

    // search
    auto* search = app.add_subcommand("search", "batch-run chain reports over a corpus");
    critset::SearchConfig cfg;
    std::string gnp_spec, bip_spec, g6_file, tags_csv;
    BudgetFlags search_budgets;
    uint64_t stop_after = 0;
    int n_min = -1, n_max = -1;
    auto* gnp_opt = search->add_option("--gnp", gnp_spec, "G(n,p) source as 'n,p'");
    auto* bip_opt = search->add_option("--bipartite", bip_spec, "bipartite source as 'n1,n2,p'");
    auto* file_opt = search->add_option("--g6-file", g6_file, "graph6 corpus file");
    gnp_opt->excludes(bip_opt)->excludes(file_opt);
    bip_opt->excludes(gnp_opt)->excludes(file_opt);
    file_opt->excludes(gnp_opt)->excludes(bip_opt);
    search->add_option("--seed", cfg.seed, "stream seed");
    search->add_option("--count", cfg.count, "number of graphs to generate");
    search->add_option("--tags", tags_csv, "keep witnesses carrying any of these tags (csv)");
    search->add_option("--out", cfg.out_path, "witness JSONL output path");
    search->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint file path");
    search->add_option("--checkpoint-every", cfg.checkpoint_every, "graphs between checkpoints")
        ->check(CLI::PositiveNumber);
    search->add_option("--stop-after", stop_after, "stop cleanly after this many graphs (total)");
    search->add_option("--jobs", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    search->add_option("--n-min", n_min, "skip graphs with fewer vertices");
    search->add_option("--n-max", n_max, "skip graphs with more vertices");
    add_budget_flags(search, search_budgets);

    // dot
    auto* dot = app.add_subcommand("dot", "DOT rendering with highlighted invariant sets");
    InputOptions dot_in;
    std::string show;
    add_input_flags(dot, dot_in, /*allow_file=*/false);
    dot->add_option("--show", show, "comma list of core,corona,ker,diadem,nucleus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(compute_in, compute_budgets, pretty);
        if (*verify) return cmd_verify(verify_in, verify_budgets, sample, seed);
        if (*dot) return cmd_dot(dot_in, show);
        if (*search) {
            cfg.budgets = search_budgets.to_budgets();
            if (stop_after > 0) cfg.stop_after = stop_after;
            if (n_min >= 0) cfg.n_min = n_min;
            if (n_max >= 0) cfg.n_max = n_max;
            if (!tags_csv.empty()) {
                std::stringstream ss(tags_csv);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto tag = critset::equality_tag_from_string(item);
                    if (!tag) throw CLI::ValidationError("--tags", "unknown tag '" + item + "'");
                    cfg.tag_filter.push_back(*tag);
                }
            }
            if (!gnp_spec.empty()) {
                cfg.source = critset::SearchConfig::Source::Gnp;
                char comma;
                std::istringstream ss(gnp_spec);
                if (!(ss >> cfg.n >> comma >> cfg.p) || comma != ',')
                    throw CLI::ValidationError("--gnp", "expected 'n,p'");
            } else if (!bip_spec.empty()) {
                cfg.source = critset::SearchConfig::Source::Bipartite;
                char c1, c2;
                std::istringstream ss(bip_spec);
                if (!(ss >> cfg.n1 >> c1 >> cfg.n2 >> c2 >> cfg.p) || c1 != ',' || c2 != ',')
                    throw CLI::ValidationError("--bipartite", "expected 'n1,n2,p'");
            } else if (!g6_file.empty()) {
                cfg.source = critset::SearchConfig::Source::File;
                cfg.g6_file = g6_file;
            } else {
                throw CLI::ValidationError("search", "one of --gnp / --bipartite / --g6-file is required");
            }
            return cmd_search(cfg);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const critset::InvariantViolation& e) {
        nlohmann::json out{{"error", "invariant_violation"}, {"witness", e.what()}};
        std::cout << out.dump() << "\n";
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const critset::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const critset::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

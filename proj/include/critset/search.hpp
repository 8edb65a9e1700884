#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "critset/chain.hpp"
#include "critset/graph.hpp"
#include "critset/json_io.hpp"
#include "critset/rng.hpp"

namespace critset {

/// G(n,p): the C(n,2) pairs are visited in lexicographic order with exactly
/// one SplitMix64(seed) double drawn per pair, so (n, p, seed) pins the graph
/// on every platform.
inline Graph generate_gnp(int n, double p, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_gnp: p must be in [0,1]");
    if (n < 0) throw std::invalid_argument("generate_gnp: negative n");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

/// Random bipartite graph on parts {0..n1-1} and {n1..n1+n2-1}; cross pairs
/// visited in lexicographic order, one draw per pair, as in generate_gnp.
inline Graph generate_bipartite(int n1, int n2, double p, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("generate_bipartite: p must be in [0,1]");
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("generate_bipartite: negative part size");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n1; ++u)
        for (int w = 0; w < n2; ++w)
            if (rng.next_double() < p) edges.emplace_back(u, n1 + w);
    return Graph::from_edges(n1 + n2, std::move(edges));
}

/// Batch-run configuration. The identity of a run -- what the checkpoint
/// protects -- is the source, seed, count, budgets, filters, and output path;
/// worker count, checkpoint cadence, and stop_after may vary between resumes.
struct SearchConfig {
    enum class Source { Gnp, Bipartite, File };
    Source source = Source::Gnp;
    int n = 0;            // Gnp
    int n1 = 0, n2 = 0;   // Bipartite
    double p = 0.0;
    std::string g6_file;  // File
    uint64_t seed = 0;
    uint64_t count = 0;   // generated graphs; ignored for File sources
    Budgets budgets;
    std::optional<int> n_min, n_max;
    std::vector<EqualityTag> tag_filter; // empty = keep every witness
    std::string out_path;                // empty = count only, no JSONL
    std::string checkpoint_path;         // empty = no checkpointing
    uint64_t checkpoint_every = 256;
    std::optional<uint64_t> stop_after;  // clean stop once this many graphs are done
    int workers = 1;
};

struct SearchSummary {
    uint64_t processed = 0;
    uint64_t witnesses = 0;
    uint64_t filtered_out = 0;
    uint64_t budget_exhausted = 0;
    std::map<std::string, uint64_t> tag_counts;
    bool finished = false; // whole corpus processed (not stopped early)
};

inline void to_json(nlohmann::json& j, const SearchSummary& s) {
    j = nlohmann::json{{"budget_exhausted", s.budget_exhausted},
                       {"filtered_out", s.filtered_out},
                       {"finished", s.finished},
                       {"processed", s.processed},
                       {"tag_counts", s.tag_counts},
                       {"witnesses", s.witnesses}};
}

namespace detail {

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string config_identity_hash(const SearchConfig& c) {
    std::ostringstream os;
    os << static_cast<int>(c.source) << '|' << c.n << '|' << c.n1 << '|' << c.n2 << '|'
       << nlohmann::json(c.p).dump() << '|' << c.g6_file << '|' << c.seed << '|' << c.count << '|'
       << c.budgets.mis << '|' << c.budgets.critical << '|' << c.budgets.cycles << '|'
       << (c.n_min ? std::to_string(*c.n_min) : "-") << '|'
       << (c.n_max ? std::to_string(*c.n_max) : "-") << '|';
    for (EqualityTag t : c.tag_filter) os << to_string(t) << ',';
    os << '|' << c.out_path;
    std::ostringstream hex;
    hex << std::hex << fnv1a(os.str());
    return hex.str();
}

/// Stream seed of the i-th generated graph.
inline uint64_t per_graph_seed(uint64_t seed, uint64_t index) {
    return SplitMix64::scramble(seed ^ SplitMix64::scramble(index + 1));
}

inline std::vector<std::string> read_g6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind(">>", 0) == 0) continue; // blank or format header
        lines.push_back(line);
    }
    return lines;
}

struct GraphOutcome {
    bool filtered = false;
    bool partial = false;
    std::vector<std::string> tags;
    std::string witness_line; // empty when filtered or not kept
};

inline GraphOutcome process_one(const SearchConfig& cfg, const Graph& g) {
    GraphOutcome out;
    const int n = g.vertex_count();
    if ((cfg.n_min && n < *cfg.n_min) || (cfg.n_max && n > *cfg.n_max)) {
        out.filtered = true;
        return out;
    }
    ChainReport report = chain_report(g, cfg.budgets);
    bool keep;
    if (report.complete()) {
        for (EqualityTag t : *report.equality_tags) out.tags.push_back(to_string(t));
        keep = cfg.tag_filter.empty();
        for (EqualityTag want : cfg.tag_filter)
            for (EqualityTag have : *report.equality_tags)
                if (want == have) keep = true;
    } else {
        out.partial = true;
        keep = cfg.tag_filter.empty();
    }
    if (keep) {
        nlohmann::json w{{"graph6", encode_graph6(g)}, {"report", report}, {"tags", out.tags}};
        out.witness_line = w.dump();
    }
    return out;
}

inline void write_checkpoint(const SearchConfig& cfg, const std::string& hash, uint64_t next_index,
                             uint64_t out_bytes, const SearchSummary& sum) {
    if (cfg.checkpoint_path.empty()) return;
    nlohmann::json j{{"budget_exhausted", sum.budget_exhausted},
                     {"config_hash", hash},
                     {"filtered_out", sum.filtered_out},
                     {"next_index", next_index},
                     {"out_bytes", out_bytes},
                     {"processed", sum.processed},
                     {"tag_counts", sum.tag_counts},
                     {"witnesses", sum.witnesses}};
    const std::string tmp = cfg.checkpoint_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, cfg.checkpoint_path);
}

} // namespace detail

/// Streams the configured corpus through chain_report, appends matching
/// witnesses as JSONL, and keeps a crash-safe checkpoint. Witness lines are
/// written in stream order regardless of worker count, so identical configs
/// produce identical files; resuming from a checkpoint continues the exact
/// remaining stream.
inline SearchSummary run_search(const SearchConfig& cfg) {
    const std::string hash = detail::config_identity_hash(cfg);

    std::vector<std::string> file_lines;
    uint64_t total;
    if (cfg.source == SearchConfig::Source::File) {
        file_lines = detail::read_g6_lines(cfg.g6_file);
        total = file_lines.size();
    } else {
        total = cfg.count;
    }

    SearchSummary sum;
    uint64_t start_index = 0;
    bool resumed = false;
    uint64_t resume_out_bytes = 0;
    if (!cfg.checkpoint_path.empty() && std::filesystem::exists(cfg.checkpoint_path)) {
        std::ifstream in(cfg.checkpoint_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw std::runtime_error("unreadable checkpoint " + cfg.checkpoint_path + ": " +
                                     e.what());
        }
        if (j.at("config_hash").get<std::string>() != hash)
            throw std::runtime_error("checkpoint " + cfg.checkpoint_path +
                                     " belongs to a different configuration; refusing to resume");
        start_index = j.at("next_index").get<uint64_t>();
        sum.processed = j.at("processed").get<uint64_t>();
        sum.witnesses = j.at("witnesses").get<uint64_t>();
        sum.filtered_out = j.at("filtered_out").get<uint64_t>();
        sum.budget_exhausted = j.at("budget_exhausted").get<uint64_t>();
        sum.tag_counts = j.at("tag_counts").get<std::map<std::string, uint64_t>>();
        resume_out_bytes = j.value("out_bytes", uint64_t{0});
        resumed = true;
    }

    const uint64_t end_index =
        std::max(start_index, std::min<uint64_t>(total, cfg.stop_after.value_or(total)));

    std::ofstream out;
    if (!cfg.out_path.empty()) {
        // A resumed run discards any witness lines written after the last
        // checkpoint (a crash may have left a ragged tail).
        if (resumed && std::filesystem::exists(cfg.out_path) &&
            std::filesystem::file_size(cfg.out_path) > resume_out_bytes)
            std::filesystem::resize_file(cfg.out_path, resume_out_bytes);
        out.open(cfg.out_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot open witness output: " + cfg.out_path);
    }

    auto graph_at = [&](uint64_t i) -> Graph {
        switch (cfg.source) {
            case SearchConfig::Source::Gnp:
                return generate_gnp(cfg.n, cfg.p, detail::per_graph_seed(cfg.seed, i));
            case SearchConfig::Source::Bipartite:
                return generate_bipartite(cfg.n1, cfg.n2, cfg.p,
                                          detail::per_graph_seed(cfg.seed, i));
            case SearchConfig::Source::File: {
                try {
                    return parse_graph6(file_lines[static_cast<size_t>(i)]);
                } catch (const ParseError& e) {
                    throw ParseError(cfg.g6_file + ", graph " + std::to_string(i + 1) + ": " +
                                     e.what());
                }
            }
        }
        throw std::logic_error("unreachable");
    };

    auto record = [&](const detail::GraphOutcome& o) {
        ++sum.processed;
        if (o.filtered) {
            ++sum.filtered_out;
            return;
        }
        if (o.partial) ++sum.budget_exhausted;
        for (const auto& t : o.tags) ++sum.tag_counts[t];
        if (!o.witness_line.empty()) {
            ++sum.witnesses;
            if (out.is_open()) out << o.witness_line << "\n";
        }
    };

    auto out_bytes = [&]() -> uint64_t {
        if (!out.is_open()) return 0;
        out.flush();
        return static_cast<uint64_t>(out.tellp());
    };

    if (cfg.workers <= 1) {
        for (uint64_t i = start_index; i < end_index; ++i) {
            record(detail::process_one(cfg, graph_at(i)));
            if (cfg.checkpoint_every && (i + 1 - start_index) % cfg.checkpoint_every == 0)
                detail::write_checkpoint(cfg, hash, i + 1, out_bytes(), sum);
        }
    } else {
        std::mutex mu;
        std::condition_variable cv;
        std::map<uint64_t, detail::GraphOutcome> ready;
        std::atomic<uint64_t> dispatch{start_index};
        std::exception_ptr worker_error;

        auto work = [&]() {
            try {
                while (true) {
                    uint64_t i = dispatch.fetch_add(1);
                    if (i >= end_index) return;
                    detail::GraphOutcome o = detail::process_one(cfg, graph_at(i));
                    std::lock_guard<std::mutex> lk(mu);
                    ready.emplace(i, std::move(o));
                    cv.notify_all();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!worker_error) worker_error = std::current_exception();
                dispatch.store(end_index); // drain remaining workers
                cv.notify_all();
            }
        };

        std::vector<std::thread> pool;
        for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work);

        for (uint64_t expect = start_index; expect < end_index; ++expect) {
            detail::GraphOutcome o;
            {
                std::unique_lock<std::mutex> lk(mu);
                cv.wait(lk, [&] { return ready.count(expect) || worker_error; });
                if (worker_error) break;
                o = std::move(ready.at(expect));
                ready.erase(expect);
            }
            record(o);
            if (cfg.checkpoint_every && (expect + 1 - start_index) % cfg.checkpoint_every == 0)
                detail::write_checkpoint(cfg, hash, expect + 1, out_bytes(), sum);
        }
        for (auto& t : pool) t.join();
        if (worker_error) std::rethrow_exception(worker_error);
    }

    sum.finished = end_index == total;
    detail::write_checkpoint(cfg, hash, end_index, out_bytes(), sum);
    return sum;
}

} // namespace critset

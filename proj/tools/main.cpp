#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stablegraphs/format.hpp"
#include "stablegraphs/oracle.hpp"
#include "stablegraphs/run.hpp"

namespace sg = stablegraphs;

namespace {

struct RunConfig {
    int genus = 0;
    int marked = 0;
    std::optional<int> vertices;
    std::string mode = "count";
    std::string format = "text";
    std::string output;
    int jobs = 1;
    bool sorted = false;
    bool no_ranges = false;
    long long dedup_guard = 10'000'000;
};

sg::GraphFormat parse_format(const std::string& name) {
    if (name == "text") return sg::GraphFormat::text;
    if (name == "json") return sg::GraphFormat::json;
    return sg::GraphFormat::dot;
}

std::string frame(const sg::StableGraphMatrix& m, sg::GraphFormat fmt) {
    // one json object per line; a blank line between text and dot blocks
    return sg::encode_graph(m, fmt) + '\n';
}

int run(const RunConfig& config) {
    sg::GraphType type{config.genus, config.marked};
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!config.output.empty()) {
        file.open(config.output);
        if (!file) {
            std::cerr << "cannot open " << config.output << " for writing\n";
            return 1;
        }
        out = &file;
    }

    sg::RunOptions opts;
    opts.type = type;
    opts.jobs = config.jobs;
    opts.use_ranges = !config.no_ranges;
    opts.dedup.guard = config.dedup_guard;

    const sg::GraphFormat fmt = parse_format(config.format);
    const bool listing = config.mode == "list";
    const bool buffer_sorted = listing && (config.jobs == 1 || config.sorted);

    std::vector<sg::EnumerationReport> per_k;
    const int klo = config.vertices ? *config.vertices : 1;
    const int khi = config.vertices ? *config.vertices : sg::max_vertices(type);
    for (int K = klo; K <= khi; ++K) {
        std::map<sg::CanonicalKey, std::string> ordered;
        sg::DistinctFn on_distinct;
        if (listing) {
            if (buffer_sorted)
                on_distinct = [&](const sg::StableGraphMatrix& m, const sg::CanonicalKey& key) {
                    ordered.emplace(key, frame(m, fmt));
                };
            else
                on_distinct = [&](const sg::StableGraphMatrix& m, const sg::CanonicalKey&) {
                    *out << frame(m, fmt);
                };
        }
        sg::RunOptions k_opts = opts;
        k_opts.vertices = K;
        sg::RunReport rep = sg::run_enumeration(k_opts, on_distinct);
        per_k.push_back(rep.per_k.at(0));
        for (const auto& [key, text] : ordered) *out << text;
    }

    if (config.mode == "count") {
        uint64_t total = 0;
        for (const auto& r : per_k) total += r.distinct;
        *out << total << '\n';
    } else if (config.mode == "stats") {
        *out << "G,N,K,emitted,duplicates,distinct,seconds\n";
        for (const auto& r : per_k)
            *out << config.genus << ',' << config.marked << ',' << r.K << ',' << r.emitted << ','
                 << r.duplicates << ',' << r.distinct << ',' << r.seconds << '\n';
    }

    out->flush();
    if (!*out) {
        std::cerr << "write failure\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generates one representative per isomorphism class of the stable graphs "
                 "of type (G, N)"};
    RunConfig config;
    int vertices = -1;

    app.add_option("--genus", config.genus, "total genus G");
    app.add_option("--marked", config.marked, "number of marked points N");
    app.add_option("--vertices", vertices, "restrict to one vertex count");
    app.add_option("--mode", config.mode, "count, list or stats")
        ->check(CLI::IsMember({"count", "list", "stats"}));
    app.add_option("--format", config.format, "list output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--output", config.output, "write to a file instead of stdout");
    app.add_option("--jobs", config.jobs, "worker threads over (g,n,l) prefixes");
    app.add_flag("--sorted", config.sorted, "buffer and sort list output when jobs > 1");
    app.add_flag("--no-ranges", config.no_ranges, "disable the sharpened bounds (debug)");
    app.add_option("--dedup-guard", config.dedup_guard,
                   "work limit for canonical labeling of one graph");

    int oracle_genus = 0, oracle_marked = 0;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force class count for small types");
    oracle_cmd->add_option("--genus", oracle_genus, "total genus G")->required();
    oracle_cmd->add_option("--marked", oracle_marked, "number of marked points N")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (oracle_cmd->parsed()) {
            sg::GraphType t{oracle_genus, oracle_marked};
            if (!t.valid()) {
                std::cerr << "need 2G + N - 2 > 0\n";
                return 2;
            }
            std::cout << sg::oracle::brute_force_classes(t).total() << '\n';
            return 0;
        }
        sg::GraphType t{config.genus, config.marked};
        if (!t.valid()) {
            std::cerr << "need 2G + N - 2 > 0\n";
            return 2;
        }
        if (vertices >= 0) {
            if (vertices < 1 || vertices > sg::max_vertices(t)) {
                std::cerr << "vertices must lie in 1.." << sg::max_vertices(t) << '\n';
                return 2;
            }
            config.vertices = vertices;
        }
        if (config.jobs < 1) {
            std::cerr << "jobs must be >= 1\n";
            return 2;
        }
        return run(config);
    } catch (const sg::DedupGuardError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}

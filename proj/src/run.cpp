#include "stablegraphs/run.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace stablegraphs {

uint64_t RunReport::emitted() const {
    uint64_t t = 0;
    for (const auto& r : per_k) t += r.emitted;
    return t;
}

uint64_t RunReport::duplicates() const {
    uint64_t t = 0;
    for (const auto& r : per_k) t += r.duplicates;
    return t;
}

uint64_t RunReport::distinct() const {
    uint64_t t = 0;
    for (const auto& r : per_k) t += r.distinct;
    return t;
}

namespace {

struct TaskResult {
    uint64_t emitted = 0;
    uint64_t distinct = 0;
};

TaskResult process_prefix(const GnlPrefix& prefix, const RunOptions& opts,
                          const DistinctFn& on_distinct, std::mutex& writer_mu) {
    TaskResult result;
    IsoClassStore store(opts.dedup);
    MatrixSink sink = [&](const StableGraphMatrix& m) {
        CanonicalKey key = canonical_key(m, opts.dedup);
        bool fresh = store.insert(m, key);
        if (fresh) {
            ++result.distinct;
            if (on_distinct) {
                std::lock_guard<std::mutex> lock(writer_mu);
                on_distinct(m, key);
            }
        }
        return fresh;
    };
    result.emitted = enumerate_from_prefix(prefix, sink, opts.use_ranges);
    return result;
}

EnumerationReport run_single_k(GraphType t, int K, const RunOptions& opts,
                               const DistinctFn& on_distinct) {
    EnumerationReport rep;
    rep.K = K;
    auto start = std::chrono::steady_clock::now();
    std::mutex writer_mu;

    if (K == 1) {
        IsoClassStore store(opts.dedup);
        for (const StableGraphMatrix& m : one_vertex_graphs(t)) {
            ++rep.emitted;
            CanonicalKey key = canonical_key(m, opts.dedup);
            if (store.insert(m, key)) {
                ++rep.distinct;
                if (on_distinct) on_distinct(m, key);
            }
        }
    } else {
        std::vector<GnlPrefix> prefixes = enumerate_prefixes(t, K, opts.use_ranges);
        if (opts.jobs <= 1 || prefixes.size() <= 1) {
            for (const GnlPrefix& p : prefixes) {
                TaskResult r = process_prefix(p, opts, on_distinct, writer_mu);
                rep.emitted += r.emitted;
                rep.distinct += r.distinct;
            }
        } else {
            std::atomic<size_t> next{0};
            std::atomic<uint64_t> emitted{0}, distinct{0};
            std::mutex error_mu;
            std::exception_ptr error;
            auto worker = [&]() {
                try {
                    for (;;) {
                        size_t idx = next.fetch_add(1);
                        if (idx >= prefixes.size()) return;
                        {
                            std::lock_guard<std::mutex> lock(error_mu);
                            if (error) return;
                        }
                        TaskResult r =
                            process_prefix(prefixes[idx], opts, on_distinct, writer_mu);
                        emitted += r.emitted;
                        distinct += r.distinct;
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            };
            std::vector<std::thread> pool;
            int workers = std::min<size_t>(opts.jobs, prefixes.size());
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (std::thread& th : pool) th.join();
            if (error) std::rethrow_exception(error);
            rep.emitted = emitted;
            rep.distinct = distinct;
        }
    }
    rep.duplicates = rep.emitted - rep.distinct;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

RunReport run_enumeration(const RunOptions& opts, const DistinctFn& on_distinct) {
    if (!opts.type.valid()) throw std::invalid_argument("2G + N - 2 must be positive");
    if (opts.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    const int kmax = max_vertices(opts.type);
    int klo = 1, khi = kmax;
    if (opts.vertices) {
        if (*opts.vertices < 1 || *opts.vertices > kmax)
            throw std::invalid_argument("vertex count out of range");
        klo = khi = *opts.vertices;
    }
    RunReport report;
    for (int K = klo; K <= khi; ++K)
        report.per_k.push_back(run_single_k(opts.type, K, opts, on_distinct));
    return report;
}

}  // namespace stablegraphs

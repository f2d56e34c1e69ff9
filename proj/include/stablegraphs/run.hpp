#pragma once

#include <functional>
#include <optional>

#include "stablegraphs/dedup.hpp"
#include "stablegraphs/enumerate.hpp"

namespace stablegraphs {

struct RunOptions {
    GraphType type;
    std::optional<int> vertices;  // fixed K, or all of 1..max_vertices
    int jobs = 1;
    bool use_ranges = true;
    DedupOptions dedup;
};

/// Receives every distinct graph with its canonical key. Calls are
/// serialized; with jobs > 1 the order across prefixes is unspecified.
using DistinctFn = std::function<void(const StableGraphMatrix&, const CanonicalKey&)>;

struct RunReport {
    std::vector<EnumerationReport> per_k;

    uint64_t emitted() const;
    uint64_t duplicates() const;
    uint64_t distinct() const;
};

/// Enumerates with deduplication. The recursion tree splits at completed
/// (g, n, l) prefixes; every prefix owns its dedup bucket outright, so
/// distinct counts do not depend on the worker count.
RunReport run_enumeration(const RunOptions& opts, const DistinctFn& on_distinct = nullptr);

}  // namespace stablegraphs

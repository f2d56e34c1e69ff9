#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablegraphs/graph.hpp"

namespace stablegraphs {

/// Thrown when canonical labeling exceeds its work budget.
class DedupGuardError : public std::runtime_error {
public:
    explicit DedupGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct DedupOptions {
    /// Upper bound on the arrangements the canonical search may examine for
    /// one graph before giving up with an explicit error.
    long long guard = 10'000'000;
};

/// Byte sequence identifying an isomorphism class within fixed K: the
/// vertex count followed by the flattening of the canonically arranged
/// matrix, two bytes big-endian per entry.
struct CanonicalKey {
    std::string bytes;

    auto operator<=>(const CanonicalKey&) const = default;
};

/// Partition of the vertices by (g, n, l) refined by iterated neighbor
/// structure; classes come in a canonical order, members ascending. Any
/// isomorphism maps classes to equally indexed classes.
std::vector<std::vector<int>> color_classes(const StableGraphMatrix& m);

/// Canonical key of the isomorphism class of m. Minimizes over the
/// permutations compatible with the refined classes.
CanonicalKey canonical_key(const StableGraphMatrix& m, const DedupOptions& opts = {});

/// Set of seen canonical keys bucketed by the (g, n, l) vectors, so that
/// only graphs agreeing there are ever compared. Safe for concurrent insert;
/// inserts into distinct buckets do not contend.
class IsoClassStore {
public:
    explicit IsoClassStore(DedupOptions opts = {}) : opts_(opts) {}

    /// True when the class was new. Expects matrices in generated form;
    /// inputs whose (g, n, l) triples are not weakly sorted fall back to a
    /// shared bucket.
    bool insert(const StableGraphMatrix& m);
    bool insert(const StableGraphMatrix& m, const CanonicalKey& key);

    uint64_t distinct() const;
    uint64_t inserted() const;

    /// Distinct keys in byte order, all buckets merged.
    std::vector<CanonicalKey> sorted_keys() const;

private:
    struct Bucket {
        std::set<CanonicalKey> keys;
        uint64_t inserted = 0;
    };

    static constexpr int kShards = 16;
    struct Shard {
        mutable std::mutex mu;
        std::map<std::vector<int>, Bucket> buckets;
    };

    std::vector<int> bucket_key(const StableGraphMatrix& m) const;

    DedupOptions opts_;
    mutable Shard shards_[kShards];
};

}  // namespace stablegraphs

#include "stablegraphs/dedup.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <limits>
#include <string_view>
#include <tuple>

namespace stablegraphs {

namespace {

/// Stable color ids, one per vertex. Initial color is the rank of the
/// (g, n, l) triple; each round appends the sorted multiset of
/// (neighbor color, multiplicity) pairs and re-ranks. The resulting ids are
/// isomorphism-invariant, totally ordered, and refine the (g, n, l) order.
std::vector<int> refined_color_ids(const StableGraphMatrix& m) {
    const int K = m.K;
    std::vector<int> ids(K, 0);
    {
        std::vector<std::pair<std::array<int, 3>, int>> triples(K);
        for (int v = 0; v < K; ++v) triples[v] = {{m.g[v], m.n[v], m.l[v]}, v};
        std::sort(triples.begin(), triples.end());
        int next = -1;
        for (int p = 0; p < K; ++p) {
            if (p == 0 || triples[p].first != triples[p - 1].first) ++next;
            ids[triples[p].second] = next;
        }
    }
    int classes = *std::max_element(ids.begin(), ids.end()) + 1;
    using Sig = std::vector<int>;
    for (int round = 0; round < K; ++round) {
        std::vector<std::pair<Sig, int>> sigs(K);
        for (int v = 0; v < K; ++v) {
            Sig sig{ids[v]};
            std::vector<std::pair<int, int>> nbrs;
            for (int w = 0; w < K; ++w) {
                if (w == v || m.at(v, w) == 0) continue;
                nbrs.emplace_back(ids[w], m.at(v, w));
            }
            std::sort(nbrs.begin(), nbrs.end());
            for (auto [c, mult] : nbrs) {
                sig.push_back(c);
                sig.push_back(mult);
            }
            sigs[v] = {std::move(sig), v};
        }
        std::sort(sigs.begin(), sigs.end());
        int next = -1;
        for (int p = 0; p < K; ++p) {
            if (p == 0 || sigs[p].first != sigs[p - 1].first) ++next;
            ids[sigs[p].second] = next;
        }
        if (next + 1 == classes) break;
        classes = next + 1;
    }
    return ids;
}

/// Minimizes the column-by-column code of the upper triangle over all
/// arrangements that list the refined classes in order, branch and bound
/// with interchangeable-vertex skipping.
class CanonicalSearch {
public:
    CanonicalSearch(const StableGraphMatrix& m, const std::vector<int>& ids, long long guard)
        : m_(m), K_(m.K), guard_(guard) {
        pos_class_.resize(K_);
        int classes = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
        members_.resize(classes);
        for (int v = 0; v < K_; ++v) members_[ids[v]].push_back(v);
        int p = 0;
        for (int c = 0; c < classes; ++c)
            for (size_t k = 0; k < members_[c].size(); ++k) pos_class_[p++] = c;
        arr_.resize(K_);
        used_.assign(K_, 0);
        best_code_.assign(static_cast<size_t>(K_) * (K_ - 1) / 2,
                          std::numeric_limits<int>::max());
        cur_code_.reserve(best_code_.size());
    }

    /// Arrangement minimizing the code; arr[p] is the original vertex placed
    /// at position p.
    std::vector<int> run() {
        dfs(0, true);
        return best_arr_;
    }

private:
    void dfs(int p, bool tight) {
        if (p == K_) {
            // the tight flag can be stale once the incumbent improved below a
            // sibling, so decide by full comparison
            if (cur_code_ < best_code_) {
                best_code_ = cur_code_;
                best_arr_ = arr_;
            } else if (best_arr_.empty()) {
                best_arr_ = arr_;
            }
            return;
        }
        const std::vector<int>& pool = members_[pos_class_[p]];
        std::vector<int> cands;
        for (int v : pool)
            if (!used_[v]) cands.push_back(v);

        // smallest column among the candidates; only its achievers can start
        // a minimal completion
        std::vector<int> min_col;
        std::vector<int> keep;
        std::vector<int> col(p);
        for (int v : cands) {
            if (++work_ > guard_)
                throw DedupGuardError("canonical labeling exceeded the dedup guard");
            for (int q = 0; q < p; ++q) col[q] = m_.at(arr_[q], v);
            if (keep.empty() || col < min_col) {
                min_col = col;
                keep.assign(1, v);
            } else if (col == min_col) {
                keep.push_back(v);
            }
        }

        bool child_tight = false;
        if (tight) {
            int cmp = 0;
            for (int q = 0; q < p && cmp == 0; ++q) {
                int b = best_code_[cur_code_.size() + q];
                cmp = (min_col[q] > b) - (min_col[q] < b);
            }
            if (cmp > 0) return;
            child_tight = (cmp == 0);
        }

        // interchangeable candidates lead to identical subtrees
        std::vector<int> reps;
        for (int v : keep) {
            bool dup = false;
            for (int u : reps)
                if (twins(u, v)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(v);
        }

        for (int v : reps) {
            arr_[p] = v;
            used_[v] = 1;
            cur_code_.insert(cur_code_.end(), min_col.begin(), min_col.end());
            dfs(p + 1, child_tight);
            cur_code_.resize(cur_code_.size() - p);
            used_[v] = 0;
        }
    }

    bool twins(int u, int v) const {
        for (int w = 0; w < K_; ++w) {
            if (w == u || w == v) continue;
            if (m_.at(u, w) != m_.at(v, w)) return false;
        }
        return m_.at(u, u) == m_.at(v, v);
    }

    const StableGraphMatrix& m_;
    int K_;
    long long guard_;
    long long work_ = 0;
    std::vector<int> pos_class_;
    std::vector<std::vector<int>> members_;
    std::vector<int> arr_, best_arr_;
    std::vector<char> used_;
    std::vector<int> best_code_, cur_code_;
};

void append_u16(std::string& out, int value) {
    assert(value >= 0 && value <= 0xFFFF);
    out.push_back(static_cast<char>((value >> 8) & 0xFF));
    out.push_back(static_cast<char>(value & 0xFF));
}

}  // namespace

std::vector<std::vector<int>> color_classes(const StableGraphMatrix& m) {
    std::vector<int> ids = refined_color_ids(m);
    int classes = *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::vector<int>> out(classes);
    for (int v = 0; v < m.K; ++v) out[ids[v]].push_back(v);
    return out;
}

CanonicalKey canonical_key(const StableGraphMatrix& m, const DedupOptions& opts) {
    assert(m.structurally_valid());
    std::vector<int> ids = refined_color_ids(m);
    CanonicalSearch search(m, ids, opts.guard);
    std::vector<int> arr = search.run();

    StableGraphMatrix canon(m.K);
    for (int p = 0; p < m.K; ++p) {
        int v = arr[p];
        canon.g[p] = m.g[v];
        canon.n[p] = m.n[v];
        canon.l[p] = m.l[v];
        for (int q = 0; q < m.K; ++q) canon.entry(p, q) = m.at(v, arr[q]);
    }

    CanonicalKey key;
    key.bytes.reserve(2 * (1 + 3 * m.K + m.K * (m.K - 1) / 2));
    append_u16(key.bytes, m.K);
    for (int value : flatten(canon)) append_u16(key.bytes, value);
    return key;
}

std::vector<int> IsoClassStore::bucket_key(const StableGraphMatrix& m) const {
    // generated matrices have their (g, n, l) triples weakly sorted; anything
    // else shares one bucket
    for (int j = 1; j < m.K; ++j) {
        auto prev = std::tuple(m.g[j - 1], m.n[j - 1], m.l[j - 1]);
        auto cur = std::tuple(m.g[j], m.n[j], m.l[j]);
        if (prev > cur) return {};
    }
    std::vector<int> key;
    key.reserve(1 + 3 * m.K);
    key.push_back(m.K);
    key.insert(key.end(), m.g.begin(), m.g.end());
    key.insert(key.end(), m.n.begin(), m.n.end());
    key.insert(key.end(), m.l.begin(), m.l.end());
    return key;
}

bool IsoClassStore::insert(const StableGraphMatrix& m) {
    return insert(m, canonical_key(m, opts_));
}

bool IsoClassStore::insert(const StableGraphMatrix& m, const CanonicalKey& key) {
    std::vector<int> bkey = bucket_key(m);
    size_t shard = std::hash<std::string_view>{}(
                       std::string_view(reinterpret_cast<const char*>(bkey.data()),
                                        bkey.size() * sizeof(int))) %
                   kShards;
    Shard& s = shards_[shard];
    std::lock_guard<std::mutex> lock(s.mu);
    Bucket& bucket = s.buckets[std::move(bkey)];
    ++bucket.inserted;
    return bucket.keys.insert(key).second;
}

uint64_t IsoClassStore::distinct() const {
    uint64_t total = 0;
    for (const Shard& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        for (const auto& [key, bucket] : s.buckets) total += bucket.keys.size();
    }
    return total;
}

uint64_t IsoClassStore::inserted() const {
    uint64_t total = 0;
    for (const Shard& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        for (const auto& [key, bucket] : s.buckets) total += bucket.inserted;
    }
    return total;
}

std::vector<CanonicalKey> IsoClassStore::sorted_keys() const {
    std::vector<CanonicalKey> keys;
    for (const Shard& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        for (const auto& [bkey, bucket] : s.buckets)
            keys.insert(keys.end(), bucket.keys.begin(), bucket.keys.end());
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace stablegraphs

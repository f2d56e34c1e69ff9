#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stablegraphs/graph.hpp"

namespace stablegraphs {

/// Closed integer interval of admissible values; lo > hi means the branch is
/// pruned.
struct IntRange {
    int lo = 0;
    int hi = -1;
    bool empty() const { return lo > hi; }
};

inline bool operator==(IntRange a, IntRange b) { return a.lo == b.lo && a.hi == b.hi; }

/// Partial assignment of one candidate matrix plus the derived counters the
/// range bounds read. The fill order is g, then n, then l, then the strict
/// upper triangle of a row by row; filled_* and a_filled say how far each
/// phase has progressed.
struct GeneratorState {
    GraphType type;
    int K = 0;

    std::vector<int> g, n, l;
    std::vector<int> a;  // K*K, mirrored as entries get assigned

    int filled_g = 0, filled_n = 0, filled_l = 0, a_filled = 0;

    /// division[j] set once columns j-1 and j are strictly separated;
    /// division[0] unused.
    std::vector<uint8_t> division;

    int p1 = 0;  // vertices assigned genus 0 (final once a positive genus appears)
    int c = 0;   // unordered vertex pairs already joined by an edge

    /// Half edges per vertex among assigned data; maintained during the a
    /// phase (n_i + 2 l_i + assigned off-diagonal row sums).
    std::vector<int> h;
    /// Sum over genus-0 vertices of max(0, 3 - h_v); a-phase only.
    int stab_deficit = 0;

    long long sum_g = 0, sum_n = 0, sum_l = 0, sum_a = 0;

    explicit GeneratorState(GraphType t, int k);

    /// Rebuilds a state by replaying prefixes through the generator's own
    /// assignment rules; used by tests and by the parallel splitter.
    static GeneratorState from_prefix(GraphType t, int k, const std::vector<int>& g_prefix,
                                      const std::vector<int>& n_prefix = {},
                                      const std::vector<int>& l_prefix = {},
                                      const std::vector<int>& a_prefix = {});

    int upper_count() const { return K * (K - 1) / 2; }
    void a_position(int idx, int& i, int& j) const;

    /// Enters the a phase: initializes h, c and the stabilization deficit
    /// from the completed g, n, l.
    void begin_a_phase();
};

/// Largest vertex count a stable graph of the given type can have:
/// max(1, 2G - 2 + N).
int max_vertices(GraphType t);

/// The G+1 one-vertex graphs (genus h, N marks, G-h loops), filtered through
/// the stability check.
std::vector<StableGraphMatrix> one_vertex_graphs(GraphType t);

/// Admissible values for g_i / n_i / l_i / a_{i,j} given the state. The
/// bounds combine the ordering lower bounds with the budget and
/// stabilization cuts; with use_ranges false only the ordering lower bounds
/// and the raw genus / marked-point budgets remain.
IntRange range_g(const GeneratorState& s, int i, bool use_ranges = true);
IntRange range_n(const GeneratorState& s, int i, bool use_ranges = true);
IntRange range_l(const GeneratorState& s, int i, bool use_ranges = true);
int lower_bound_a(const GeneratorState& s, int i, int j);
IntRange range_a(const GeneratorState& s, int i, int j, bool use_ranges = true);

/// Per-K outcome of one enumeration pass. Duplicate/distinct numbers are
/// meaningful when the sink deduplicates (returns false for duplicates).
struct EnumerationReport {
    int K = 0;
    uint64_t emitted = 0;
    uint64_t duplicates = 0;
    uint64_t distinct = 0;
    double seconds = 0.0;
};

/// Sink for completed matrices. The return value says whether the matrix was
/// new; a sink with no dedup should return true.
using MatrixSink = std::function<bool(const StableGraphMatrix&)>;

/// Runs the full recursion for one vertex count, sending every completed
/// matrix that passes the final stability validation to the sink. Emitted
/// matrices carry no breaking position.
EnumerationReport enumerate_graphs(GraphType t, int K, const MatrixSink& sink,
                                   bool use_ranges = true);

/// All vertex counts 1..max_vertices(t).
std::vector<EnumerationReport> enumerate_all(GraphType t, const MatrixSink& sink,
                                             bool use_ranges = true);

/// Completed (g, n, l) prefix, the unit of parallel splitting: distinct
/// prefixes generate disjoint emission sets and share no state.
struct GnlPrefix {
    GraphType type;
    int K = 0;
    std::vector<int> g, n, l;
    std::vector<uint8_t> division;
    int p1 = 0;
};

/// Enumerates the admissible (g, n, l) prefixes for one vertex count in
/// generation order (empty list for K = 1, which has no a phase).
std::vector<GnlPrefix> enumerate_prefixes(GraphType t, int K, bool use_ranges = true);

/// Runs the a phase below one prefix.
uint64_t enumerate_from_prefix(const GnlPrefix& p, const MatrixSink& sink,
                               bool use_ranges = true);

}  // namespace stablegraphs

#pragma once

#include <vector>

#include "stablegraphs/graph.hpp"

namespace stablegraphs {
namespace oracle {

/// One representative per isomorphism class, grouped by vertex count.
/// Built by exhaustive search and definition-level isomorphism tests only;
/// shares nothing with the production enumerator.
struct OracleClassSet {
    GraphType type;
    std::vector<std::vector<StableGraphMatrix>> by_vertex_count;  // index K-1

    size_t total() const {
        size_t t = 0;
        for (const auto& reps : by_vertex_count) t += reps.size();
        return t;
    }
};

/// Definition-level isomorphism: some bijection matching colors and
/// multiplicities. Different vertex counts compare as false.
bool are_isomorphic(const StableGraphMatrix& m1, const StableGraphMatrix& m2);

/// Every stable matrix on exactly K labeled vertices, by exhausting all
/// assignments within the genus and marked-point budgets.
std::vector<StableGraphMatrix> stable_matrices(GraphType t, int K);

/// Brute-force classification for small types; guarded to
/// max_vertices(t) <= 7.
OracleClassSet brute_force_classes(GraphType t);

}  // namespace oracle
}  // namespace stablegraphs

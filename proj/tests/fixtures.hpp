#pragma once

#include <random>

#include "stablegraphs/graph.hpp"

namespace fixtures {

using stablegraphs::StableGraphMatrix;

// Four-vertex chain of isomorphic matrices used across the test suites:
// m0 is stable of type (5, 3) and reduces to m3 through adjacent
// transpositions at columns 3, 2, 1.
inline StableGraphMatrix m0() {
    return StableGraphMatrix::from_upper({0, 0, 2, 0}, {1, 1, 0, 1}, {0, 0, 0, 0},
                                         {1, 1, 1, 2, 1, 0});
}

inline StableGraphMatrix m1() {
    return StableGraphMatrix::from_upper({0, 0, 0, 2}, {1, 1, 1, 0}, {0, 0, 0, 0},
                                         {1, 1, 1, 1, 2, 0});
}

inline StableGraphMatrix m2() {
    return StableGraphMatrix::from_upper({0, 0, 0, 2}, {1, 1, 1, 0}, {0, 0, 0, 0},
                                         {1, 1, 1, 1, 0, 2});
}

inline StableGraphMatrix m3() {
    return StableGraphMatrix::from_upper({0, 0, 0, 2}, {1, 1, 1, 0}, {0, 0, 0, 0},
                                         {1, 1, 0, 1, 1, 2});
}

/// Structurally valid random matrix with entries <= max_entry.
inline StableGraphMatrix random_matrix(std::mt19937& rng, int K, int max_entry) {
    std::uniform_int_distribution<int> dist(0, max_entry);
    std::vector<int> g(K), n(K), l(K), upper(K * (K - 1) / 2);
    for (int& x : g) x = dist(rng);
    for (int& x : n) x = dist(rng);
    for (int& x : l) x = dist(rng);
    for (int& x : upper) x = dist(rng);
    return StableGraphMatrix::from_upper(g, n, l, upper);
}

/// Random permutation applied through adjacent transpositions.
inline StableGraphMatrix random_image(std::mt19937& rng, const StableGraphMatrix& m) {
    StableGraphMatrix r = m;
    if (m.K < 2) return r;
    std::uniform_int_distribution<int> dist(1, m.K - 1);
    for (int step = 0; step < 4 * m.K; ++step) r = apply_transposition(r, dist(rng));
    return r;
}

}  // namespace fixtures

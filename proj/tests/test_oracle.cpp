#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "stablegraphs/enumerate.hpp"
#include "stablegraphs/oracle.hpp"

using namespace stablegraphs;
using oracle::are_isomorphic;
using oracle::brute_force_classes;

TEST_CASE("definition-level isomorphism") {
    CHECK(are_isomorphic(fixtures::m0(), fixtures::m3()));
    CHECK(are_isomorphic(fixtures::m1(), fixtures::m2()));
    CHECK_FALSE(are_isomorphic(StableGraphMatrix::single_vertex(1, 0, 1),
                               StableGraphMatrix::single_vertex(0, 0, 2)));
    CHECK_FALSE(are_isomorphic(fixtures::m0(), StableGraphMatrix::single_vertex(5, 3, 0)));

    std::mt19937 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        StableGraphMatrix m = fixtures::random_matrix(rng, 2 + trial % 4, 2);
        CHECK(are_isomorphic(m, fixtures::random_image(rng, m)));
    }
}

TEST_CASE("class counts for small types") {
    CHECK(brute_force_classes({0, 3}).total() == 1);
    CHECK(brute_force_classes({0, 4}).total() == 2);
    CHECK(brute_force_classes({1, 1}).total() == 2);
    CHECK(brute_force_classes({1, 2}).total() == 5);
    // one class per stratum of the genus-2 space
    CHECK(brute_force_classes({2, 0}).total() == 7);
}

TEST_CASE("representatives are pairwise non-isomorphic and stable") {
    for (auto [G, N] : {std::pair{1, 2}, {2, 1}}) {
        GraphType t{G, N};
        oracle::OracleClassSet classes = brute_force_classes(t);
        for (const auto& reps : classes.by_vertex_count) {
            for (size_t i = 0; i < reps.size(); ++i) {
                CHECK(is_stable(reps[i], t));
                for (size_t j = i + 1; j < reps.size(); ++j)
                    CHECK_FALSE(are_isomorphic(reps[i], reps[j]));
            }
        }
    }
}

TEST_CASE("reduction closure over oracle representatives") {
    for (auto [G, N] : {std::pair{1, 2}, {2, 0}, {0, 5}}) {
        for (const auto& reps : brute_force_classes({G, N}).by_vertex_count)
            for (const StableGraphMatrix& rep : reps) {
                StableGraphMatrix reduced = reduce_to_generated_form(rep);
                CHECK(are_isomorphic(rep, reduced));
                CHECK_FALSE(find_breaking_position(reduced).has_value());
            }
    }
}

TEST_CASE("guard on oversized types") {
    CHECK_THROWS_AS(brute_force_classes({2, 10}), std::invalid_argument);
}

TEST_CASE("entry bound holds on everything the search finds") {
    for (auto [G, N] : {std::pair{2, 1}, {1, 3}}) {
        GraphType t{G, N};
        for (int K = 1; K <= max_vertices(t); ++K)
            for (const StableGraphMatrix& m : oracle::stable_matrices(t, K)) {
                CHECK(is_stable(m, t));
                for (int v = 0; v < K; ++v) CHECK(m.l[v] <= G + K - 1);
                for (int v = 0; v < K; ++v)
                    for (int w = v + 1; w < K; ++w) CHECK(m.at(v, w) <= G + K - 1);
            }
    }
}

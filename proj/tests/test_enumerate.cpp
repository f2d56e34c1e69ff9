#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "fixtures.hpp"
#include "stablegraphs/enumerate.hpp"
#include "stablegraphs/oracle.hpp"

using namespace stablegraphs;

namespace {

std::vector<StableGraphMatrix> collect(GraphType t, int K, bool use_ranges = true) {
    std::vector<StableGraphMatrix> out;
    enumerate_graphs(t, K, [&](const StableGraphMatrix& m) {
        out.push_back(m);
        return true;
    }, use_ranges);
    return out;
}

std::multiset<std::vector<int>> flat_multiset(const std::vector<StableGraphMatrix>& ms) {
    std::multiset<std::vector<int>> set;
    for (const auto& m : ms) set.insert(flatten(m));
    return set;
}

}  // namespace

TEST_CASE("max vertices") {
    CHECK(max_vertices({0, 3}) == 1);
    CHECK(max_vertices({1, 1}) == 1);
    CHECK(max_vertices({2, 0}) == 2);
    CHECK(max_vertices({2, 10}) == 12);
    CHECK_THROWS_AS(max_vertices({0, 2}), std::invalid_argument);

    // nothing beyond the bound: sweep (2,0) well past it
    for (int K = 3; K <= 6; ++K) CHECK(oracle::stable_matrices({2, 0}, K).empty());
    for (int K = 2; K <= 4; ++K) CHECK(oracle::stable_matrices({1, 1}, K).empty());
}

TEST_CASE("one-vertex graphs") {
    auto graphs = one_vertex_graphs({2, 0});
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == StableGraphMatrix::single_vertex(0, 0, 2));
    CHECK(graphs[1] == StableGraphMatrix::single_vertex(1, 0, 1));
    CHECK(graphs[2] == StableGraphMatrix::single_vertex(2, 0, 0));

    CHECK(one_vertex_graphs({0, 3}).size() == 1);
    CHECK(one_vertex_graphs({1, 1}).size() == 2);

    for (int G = 0; G <= 6; ++G)
        for (int N = 0; N <= 6; ++N) {
            GraphType t{G, N};
            if (!t.valid()) continue;
            CHECK(one_vertex_graphs(t).size() == static_cast<size_t>(G + 1));
        }
}

TEST_CASE("genus ranges") {
    GeneratorState s0 = GeneratorState::from_prefix({3, 0}, 3, {});
    CHECK(range_g(s0, 0) == IntRange{0, 1});

    GeneratorState s1 = GeneratorState::from_prefix({2, 0}, 2, {});
    CHECK(range_g(s1, 0) == IntRange{0, 1});  // g = (1,1) must stay reachable

    GeneratorState s2 = GeneratorState::from_prefix({3, 0}, 3, {2});
    CHECK(range_g(s2, 1).empty());  // lower bound 2 exceeds the leftover budget
}

TEST_CASE("marked-point ranges") {
    GeneratorState s0 = GeneratorState::from_prefix({0, 4}, 2, {0, 0});
    IntRange r0 = range_n(s0, 0);
    CHECK(r0.hi == 2);  // two genus-0 vertices in one block share the budget
    CHECK(r0.lo == 2);  // and each needs two stabilizing marks

    GeneratorState s1 = GeneratorState::from_prefix({1, 2}, 2, {0, 1}, {2});
    CHECK(range_n(s1, 1).lo == 0);  // division resets the monotone bound

    GeneratorState s2 = GeneratorState::from_prefix({0, 4}, 2, {0, 0}, {4});
    IntRange r2 = range_n(s2, 1);
    CHECK(r2.hi == 0);
    CHECK(r2.empty());  // lower bound 4 against an exhausted budget
}

TEST_CASE("loop ranges") {
    GeneratorState s0 = GeneratorState::from_prefix({1, 2}, 2, {0, 1}, {2, 0});
    CHECK(range_l(s0, 0).hi == 0);  // genus budget exhausted

    GeneratorState s1 = GeneratorState::from_prefix({1, 1}, 1, {0}, {1});
    CHECK(range_l(s1, 0) == IntRange{1, 1});  // the unique loop graph is forced

    GeneratorState s2 = GeneratorState::from_prefix({3, 0}, 2, {1, 1}, {0, 0});
    CHECK(range_l(s2, 0).hi == 1);  // no genus-0 witness, the budget rules
}

TEST_CASE("adjacency start values") {
    GeneratorState s0 = GeneratorState::from_prefix({2, 0}, 2, {0, 0}, {0, 0}, {0, 0});
    CHECK(lower_bound_a(s0, 0, 1) == 0);

    GeneratorState s1 = GeneratorState::from_prefix({3, 0}, 3, {0, 1, 2}, {0, 0, 0}, {0, 0, 0});
    REQUIRE(s1.division[1]);
    REQUIRE(s1.division[2]);
    CHECK(lower_bound_a(s1, 1, 2) == 0);

    // fourth case: no divisions, start from max of the two references
    GeneratorState s2 = GeneratorState::from_prefix({9, 0}, 4, {1, 1, 1, 1}, {0, 0, 0, 0},
                                                    {0, 0, 0, 0});
    auto put = [&](int i, int j, int v) {
        s2.a[static_cast<size_t>(i) * 4 + j] = v;
        s2.a[static_cast<size_t>(j) * 4 + i] = v;
    };
    put(0, 1, 2);
    put(0, 2, 2);
    put(0, 3, 2);
    put(1, 2, 1);
    CHECK(lower_bound_a(s2, 1, 3) == 2);  // max{a(1,2), a(0,3)} = max{1, 2}
}

TEST_CASE("adjacency ranges") {
    GeneratorState s0 = GeneratorState::from_prefix({2, 0}, 2, {0, 0}, {0, 0}, {0, 0});
    IntRange r0 = range_a(s0, 0, 1);
    CHECK(r0.hi == 3);  // e_max with no connectivity debt
    CHECK(r0.lo == 3);  // last column, three half edges still missing

    GeneratorState s1 = GeneratorState::from_prefix({1, 3}, 2, {0, 0}, {1, 2}, {0, 0});
    CHECK(range_a(s1, 0, 1).lo == 2);  // 3 - h_i with h_i = 1

    GeneratorState s2 = GeneratorState::from_prefix({2, 0}, 3, {0, 1, 1}, {0, 0, 0}, {0, 0, 0},
                                                    {1});
    CHECK(range_a(s2, 1, 2).lo == 0);  // vertex already wired, no forcing
}

TEST_CASE("division flags match the assigned data") {
    for (auto [G, N, K] : {std::tuple{2, 2, 3}, {1, 3, 3}, {2, 1, 4}}) {
        for (const GnlPrefix& p : enumerate_prefixes({G, N}, K)) {
            for (int j = 1; j < K; ++j) {
                bool expect = p.g[j] > p.g[j - 1] || p.n[j] > p.n[j - 1] || p.l[j] > p.l[j - 1];
                CHECK(static_cast<bool>(p.division[j]) == expect);
            }
            int zeros = static_cast<int>(std::count(p.g.begin(), p.g.end(), 0));
            CHECK(p.p1 == zeros);
        }
    }
}

TEST_CASE("enumerate basics") {
    CHECK(collect({0, 3}, 1).size() == 1);
    CHECK_THROWS_AS(enumerate_graphs({0, 3}, 2, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs({2, 0}, 0, nullptr), std::invalid_argument);

    // identical inputs, identical emission sequences
    auto first = collect({1, 3}, 3);
    auto second = collect({1, 3}, 3);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}

TEST_CASE("emitted matrices are stable and in generated form") {
    for (auto [G, N] : {std::pair{2, 1}, {1, 3}, {2, 2}}) {
        GraphType t{G, N};
        for (int K = 1; K <= max_vertices(t); ++K)
            for (const StableGraphMatrix& m : collect(t, K)) {
                CHECK(is_stable(m, t));
                CHECK_FALSE(find_breaking_position(m).has_value());
            }
    }
}

TEST_CASE("pruning soundness on small types") {
    for (auto [G, N] : {std::pair{1, 2}, {2, 1}, {0, 5}}) {
        GraphType t{G, N};
        for (int K = 2; K <= max_vertices(t); ++K)
            CHECK(flat_multiset(collect(t, K, true)) == flat_multiset(collect(t, K, false)));
    }
}

TEST_CASE("every oracle class reduces onto an emitted matrix") {
    for (auto [G, N] : {std::pair{1, 2}, {2, 0}, {2, 1}}) {
        GraphType t{G, N};
        oracle::OracleClassSet classes = oracle::brute_force_classes(t);
        for (int K = 1; K <= max_vertices(t); ++K) {
            auto emitted = flat_multiset(collect(t, K));
            for (const StableGraphMatrix& rep : classes.by_vertex_count[K - 1]) {
                StableGraphMatrix reduced = reduce_to_generated_form(rep);
                CHECK(emitted.count(flatten(reduced)) > 0);
            }
        }
    }
}

TEST_CASE("prefix split covers the whole recursion") {
    GraphType t{2, 2};
    for (int K = 2; K <= max_vertices(t); ++K) {
        std::vector<StableGraphMatrix> whole = collect(t, K);
        std::vector<StableGraphMatrix> split;
        uint64_t emitted = 0;
        for (const GnlPrefix& p : enumerate_prefixes(t, K))
            emitted += enumerate_from_prefix(p, [&](const StableGraphMatrix& m) {
                split.push_back(m);
                return true;
            });
        CHECK(emitted == whole.size());
        CHECK(flat_multiset(split) == flat_multiset(whole));
    }
}

TEST_CASE("enumerate_all distinct counts on tiny types") {
    for (auto [G, N, expected] : {std::tuple{1, 1, 2}, {0, 4, 2}, {0, 3, 1}}) {
        std::vector<StableGraphMatrix> seen;
        MatrixSink dedup = [&](const StableGraphMatrix& m) {
            for (const StableGraphMatrix& other : seen)
                if (oracle::are_isomorphic(other, m)) return false;
            seen.push_back(m);
            return true;
        };
        uint64_t distinct = 0;
        for (const EnumerationReport& r : enumerate_all({G, N}, dedup)) distinct += r.distinct;
        CHECK(distinct == static_cast<uint64_t>(expected));
    }
}

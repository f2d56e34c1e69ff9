#include "stablegraphs/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "stablegraphs/enumerate.hpp"

namespace stablegraphs {
namespace oracle {

bool are_isomorphic(const StableGraphMatrix& m1, const StableGraphMatrix& m2) {
    if (m1.K != m2.K) return false;
    const int K = m1.K;
    auto color = [](const StableGraphMatrix& m, int v) {
        return std::tuple(m.g[v], m.n[v], m.l[v]);
    };
    std::vector<int> perm(K);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < K && ok; ++v) ok = color(m1, v) == color(m2, perm[v]);
        for (int v = 0; v < K && ok; ++v)
            for (int w = v + 1; w < K && ok; ++w)
                ok = m1.at(v, w) == m2.at(perm[v], perm[w]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

/// Exhausts g within the genus budget, n within the marked-point budget,
/// then loops and adjacency entries against the edge total forced by the
/// total-genus condition.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(GraphType t, int K, std::vector<StableGraphMatrix>& out)
        : t_(t), K_(K), m_(K), out_(out) {}

    void run() { fill_g(0, 0); }

private:
    void fill_g(int v, int sum) {
        if (v == K_) {
            edge_total_ = t_.genus - sum + K_ - 1;
            if (edge_total_ >= 0) fill_n(0, 0);
            return;
        }
        for (int x = 0; sum + x <= t_.genus; ++x) {
            m_.g[v] = x;
            fill_g(v + 1, sum + x);
        }
    }

    void fill_n(int v, int sum) {
        if (v == K_) {
            if (sum == t_.marked) fill_l(0, 0);
            return;
        }
        for (int x = 0; sum + x <= t_.marked; ++x) {
            m_.n[v] = x;
            fill_n(v + 1, sum + x);
        }
    }

    void fill_l(int v, int used) {
        if (v == K_) {
            fill_a(0, 1, used);
            return;
        }
        for (int x = 0; used + x <= edge_total_; ++x) {
            m_.l[v] = x;
            m_.entry(v, v) = x;
            fill_l(v + 1, used + x);
        }
    }

    void fill_a(int i, int j, int used) {
        if (i == K_ - 1 || K_ == 1) {
            if (used == edge_total_ && is_stable(m_, t_)) out_.push_back(m_);
            return;
        }
        const int ni = (j + 1 < K_) ? i : i + 1;
        const int nj = (j + 1 < K_) ? j + 1 : i + 2;
        for (int x = 0; used + x <= edge_total_; ++x) {
            m_.entry(i, j) = x;
            m_.entry(j, i) = x;
            fill_a(ni, nj, used + x);
        }
    }

    GraphType t_;
    int K_;
    int edge_total_ = 0;
    StableGraphMatrix m_;
    std::vector<StableGraphMatrix>& out_;
};

/// Sorted per-vertex (g, n, l, deg) profile; equal for isomorphic matrices.
std::vector<std::array<int, 4>> invariant_profile(const StableGraphMatrix& m) {
    std::vector<std::array<int, 4>> prof(m.K);
    for (int v = 0; v < m.K; ++v) prof[v] = {m.g[v], m.n[v], m.l[v], m.degree(v)};
    std::sort(prof.begin(), prof.end());
    return prof;
}

}  // namespace

std::vector<StableGraphMatrix> stable_matrices(GraphType t, int K) {
    if (!t.valid()) throw std::invalid_argument("2G + N - 2 must be positive");
    if (K < 1) throw std::invalid_argument("vertex count must be >= 1");
    std::vector<StableGraphMatrix> out;
    ExhaustiveSearch search(t, K, out);
    search.run();
    return out;
}

OracleClassSet brute_force_classes(GraphType t) {
    const int kmax = max_vertices(t);
    if (kmax > 7) throw std::invalid_argument("type too large for the brute-force oracle");
    OracleClassSet set;
    set.type = t;
    set.by_vertex_count.resize(kmax);
    for (int K = 1; K <= kmax; ++K) {
        std::vector<StableGraphMatrix> all = stable_matrices(t, K);
        std::map<std::vector<std::array<int, 4>>, std::vector<size_t>> groups;
        std::vector<StableGraphMatrix>& reps = set.by_vertex_count[K - 1];
        for (StableGraphMatrix& m : all) {
            std::vector<size_t>& bucket = groups[invariant_profile(m)];
            bool known = false;
            for (size_t rep_index : bucket)
                if (are_isomorphic(reps[rep_index], m)) {
                    known = true;
                    break;
                }
            if (!known) {
                bucket.push_back(reps.size());
                reps.push_back(std::move(m));
            }
        }
    }
    return set;
}

}  // namespace oracle
}  // namespace stablegraphs

#include "stablegraphs/graph.hpp"

#include <algorithm>
#include <cassert>

namespace stablegraphs {

StableGraphMatrix StableGraphMatrix::from_upper(std::vector<int> g, std::vector<int> n,
                                                std::vector<int> l,
                                                const std::vector<int>& upper) {
    const int k = static_cast<int>(g.size());
    if (k < 1 || n.size() != g.size() || l.size() != g.size())
        throw std::invalid_argument("g, n, l must have equal nonzero length");
    if (upper.size() != static_cast<size_t>(k) * (k - 1) / 2)
        throw std::invalid_argument("upper triangle has wrong length");
    StableGraphMatrix m(k);
    m.g = std::move(g);
    m.n = std::move(n);
    m.l = std::move(l);
    size_t t = 0;
    for (int i = 0; i < k; ++i) {
        m.entry(i, i) = m.l[i];
        for (int j = i + 1; j < k; ++j, ++t) {
            m.entry(i, j) = upper[t];
            m.entry(j, i) = upper[t];
        }
    }
    return m;
}

StableGraphMatrix StableGraphMatrix::single_vertex(int genus, int marked, int loops) {
    StableGraphMatrix m(1);
    m.g[0] = genus;
    m.n[0] = marked;
    m.l[0] = loops;
    m.entry(0, 0) = loops;
    return m;
}

int StableGraphMatrix::degree(int j) const {
    int d = 2 * l[j];
    for (int i = 0; i < K; ++i)
        if (i != j) d += at(i, j);
    return d;
}

int StableGraphMatrix::edge_count() const {
    int e = 0;
    for (int j = 0; j < K; ++j) e += l[j];
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) e += at(i, j);
    return e;
}

bool StableGraphMatrix::structurally_valid() const {
    if (K < 1) return false;
    if (g.size() != static_cast<size_t>(K) || n.size() != static_cast<size_t>(K) ||
        l.size() != static_cast<size_t>(K) || a.size() != static_cast<size_t>(K) * K)
        return false;
    for (int j = 0; j < K; ++j) {
        if (g[j] < 0 || n[j] < 0 || l[j] < 0) return false;
        if (at(j, j) != l[j]) return false;
        for (int i = 0; i < j; ++i)
            if (at(i, j) < 0 || at(i, j) != at(j, i)) return false;
    }
    return true;
}

bool operator==(const StableGraphMatrix& x, const StableGraphMatrix& y) {
    return x.K == y.K && x.g == y.g && x.n == y.n && x.l == y.l && x.a == y.a;
}

int total_genus(const StableGraphMatrix& m) {
    int sum_g = 0;
    for (int j = 0; j < m.K; ++j) sum_g += m.g[j];
    return sum_g + m.edge_count() - (m.K - 1);
}

bool is_connected(const StableGraphMatrix& m) {
    const int k = m.K;
    if (k <= 1) return true;
    std::vector<int> stack{0};
    std::vector<char> seen(k, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < k; ++w) {
            if (w == v || seen[w] || m.at(v, w) == 0) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == k;
}

bool is_stable(const StableGraphMatrix& m, GraphType t) {
    assert(m.structurally_valid());
    if (!is_connected(m)) return false;
    if (total_genus(m) != t.genus) return false;
    int sum_n = 0;
    for (int j = 0; j < m.K; ++j) sum_n += m.n[j];
    if (sum_n != t.marked) return false;
    for (int j = 0; j < m.K; ++j)
        if (m.g[j] == 0 && m.degree(j) + m.n[j] < 3) return false;
    return true;
}

std::vector<int> flatten(const StableGraphMatrix& m) {
    std::vector<int> v;
    v.reserve(3 * m.K + m.K * (m.K - 1) / 2);
    v.insert(v.end(), m.g.begin(), m.g.end());
    v.insert(v.end(), m.n.begin(), m.n.end());
    v.insert(v.end(), m.l.begin(), m.l.end());
    for (int i = 0; i < m.K; ++i)
        for (int j = i + 1; j < m.K; ++j) v.push_back(m.at(i, j));
    return v;
}

bool precedes(const StableGraphMatrix& m1, const StableGraphMatrix& m2) {
    if (m1.K != m2.K)
        throw std::invalid_argument("the order is defined only within fixed vertex count");
    return flatten(m1) < flatten(m2);
}

StableGraphMatrix apply_transposition(const StableGraphMatrix& m, int j) {
    if (j < 1 || j >= m.K) throw std::out_of_range("transposition index out of range");
    StableGraphMatrix r = m;
    std::swap(r.g[j - 1], r.g[j]);
    std::swap(r.n[j - 1], r.n[j]);
    std::swap(r.l[j - 1], r.l[j]);
    for (int i = 0; i < r.K; ++i) std::swap(r.entry(i, j - 1), r.entry(i, j));
    for (int i = 0; i < r.K; ++i) std::swap(r.entry(j - 1, i), r.entry(j, i));
    return r;
}

std::optional<BreakingPosition> find_breaking_position(const StableGraphMatrix& m) {
    using Kind = BreakingPosition::Kind;
    for (int j = 1; j < m.K; ++j) {
        // First difference between columns j-1 and j decides; skipped a-rows
        // are exactly {j-1, j}.
        if (m.g[j - 1] != m.g[j]) {
            if (m.g[j - 1] > m.g[j]) return BreakingPosition{Kind::genus, 0, j};
            continue;
        }
        if (m.n[j - 1] != m.n[j]) {
            if (m.n[j - 1] > m.n[j]) return BreakingPosition{Kind::marks, 1, j};
            continue;
        }
        if (m.l[j - 1] != m.l[j]) {
            if (m.l[j - 1] > m.l[j]) return BreakingPosition{Kind::loops, 2, j};
            continue;
        }
        for (int i = 0; i < m.K; ++i) {
            if (i == j - 1 || i == j) continue;
            int left = m.at(i, j - 1), right = m.at(i, j);
            if (left == right) continue;
            if (left > right) return BreakingPosition{Kind::adjacency, i, j};
            break;
        }
    }
    return std::nullopt;
}

StableGraphMatrix reduce_to_generated_form(StableGraphMatrix m) {
    for (;;) {
        auto pos = find_breaking_position(m);
        if (!pos) return m;
        StableGraphMatrix next = apply_transposition(m, pos->column);
        assert(precedes(next, m));
        m = std::move(next);
    }
}

}  // namespace stablegraphs

#include "stablegraphs/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>

namespace stablegraphs {

namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

int floor_div(int num, int den) {
    assert(den > 0);
    int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

}  // namespace

GeneratorState::GeneratorState(GraphType t, int k)
    : type(t),
      K(k),
      g(k, 0),
      n(k, 0),
      l(k, 0),
      a(static_cast<size_t>(k) * k, 0),
      division(k, 0),
      h(k, 0) {}

void GeneratorState::a_position(int idx, int& i, int& j) const {
    i = 0;
    int row_len = K - 1;
    while (idx >= row_len) {
        idx -= row_len;
        ++i;
        --row_len;
    }
    j = i + 1 + idx;
}

void GeneratorState::begin_a_phase() {
    c = 0;
    sum_a = 0;
    stab_deficit = 0;
    for (int v = 0; v < K; ++v) {
        h[v] = n[v] + 2 * l[v];
        a[static_cast<size_t>(v) * K + v] = l[v];
        if (g[v] == 0) stab_deficit += std::max(0, 3 - h[v]);
    }
    a_filled = 0;
}

GeneratorState GeneratorState::from_prefix(GraphType t, int k, const std::vector<int>& g_prefix,
                                           const std::vector<int>& n_prefix,
                                           const std::vector<int>& l_prefix,
                                           const std::vector<int>& a_prefix) {
    GeneratorState s(t, k);
    for (int v : g_prefix) {
        int i = s.filled_g;
        s.g[i] = v;
        s.sum_g += v;
        if (v == 0) ++s.p1;
        if (i >= 1 && v > s.g[i - 1]) s.division[i] = 1;
        ++s.filled_g;
    }
    for (int v : n_prefix) {
        int i = s.filled_n;
        s.n[i] = v;
        s.sum_n += v;
        if (i >= 1 && v > s.n[i - 1]) s.division[i] = 1;
        ++s.filled_n;
    }
    for (int v : l_prefix) {
        int i = s.filled_l;
        s.l[i] = v;
        s.sum_l += v;
        if (i >= 1 && v > s.l[i - 1]) s.division[i] = 1;
        ++s.filled_l;
    }
    if (s.filled_l == k && k >= 2) {
        s.begin_a_phase();
        for (int v : a_prefix) {
            int i, j;
            s.a_position(s.a_filled, i, j);
            s.a[static_cast<size_t>(i) * k + j] = v;
            s.a[static_cast<size_t>(j) * k + i] = v;
            s.sum_a += v;
            for (int e : {i, j})
                if (s.g[e] == 0) {
                    s.stab_deficit -= std::max(0, 3 - s.h[e]);
                    s.stab_deficit += std::max(0, 3 - s.h[e] - v);
                }
            s.h[i] += v;
            s.h[j] += v;
            if (v > 0) ++s.c;
            if (i >= 1 && v > s.a[static_cast<size_t>(i - 1) * k + j]) s.division[i] = 1;
            if (i != j - 1 && v > s.a[static_cast<size_t>(i) * k + j - 1]) s.division[j] = 1;
            ++s.a_filled;
        }
    }
    return s;
}

int max_vertices(GraphType t) {
    if (!t.valid()) throw std::invalid_argument("2G + N - 2 must be positive");
    return std::max(1, 2 * t.genus - 2 + t.marked);
}

std::vector<StableGraphMatrix> one_vertex_graphs(GraphType t) {
    if (!t.valid()) throw std::invalid_argument("2G + N - 2 must be positive");
    std::vector<StableGraphMatrix> out;
    out.reserve(t.genus + 1);
    for (int h = 0; h <= t.genus; ++h) {
        StableGraphMatrix m = StableGraphMatrix::single_vertex(h, t.marked, t.genus - h);
        if (is_stable(m, t)) out.push_back(std::move(m));
    }
    return out;
}

IntRange range_g(const GeneratorState& s, int i, bool use_ranges) {
    const int G = s.type.genus, N = s.type.marked, K = s.K;
    const int budget = G - static_cast<int>(s.sum_g);
    int lo = (i == 0) ? 0 : s.g[i - 1];
    if (!use_ranges) return {lo, budget};
    int hi = floor_div(budget, K - i >= 1 ? K - i : 1);
    if (K >= 2) {
        // stabilization supply: 2 p1 <= 2 e_max - K + N, with future genera
        // bounded below by (K-i) g_i
        int hi3 = floor_div(2 * budget + K - 2 + N - 2 * s.p1, 2 * (K - i));
        hi = std::min(hi, hi3);
    }
    return {lo, hi};
}

IntRange range_n(const GeneratorState& s, int i, bool use_ranges) {
    const int G = s.type.genus, N = s.type.marked, K = s.K;
    int lo = (i >= 1 && s.division[i]) ? 0 : (i == 0 ? 0 : s.n[i - 1]);
    int hi = N - static_cast<int>(s.sum_n);
    if (!use_ranges) return {lo, hi};
    if (s.g[i] == 0) {
        // all genus-0 vertices >= i sit in the same division block and will
        // each receive at least n_i marks
        hi = floor_div(hi, s.p1 - i);
        if (K >= 2) {
            int n2_before = 0;
            for (int v = 0; v < i; ++v) n2_before += std::min(2, s.n[v]);
            int rhs = 2 * (i + 1) - n2_before - (2 * (G - static_cast<int>(s.sum_g)) + K - 2);
            if (rhs > 2) return {0, -1};
            if (rhs >= 1) lo = std::max(lo, rhs);
        }
    }
    return {lo, hi};
}

IntRange range_l(const GeneratorState& s, int i, bool use_ranges) {
    const int G = s.type.genus, K = s.K;
    const int budget = G - static_cast<int>(s.sum_g) - static_cast<int>(s.sum_l);
    int lo = (i >= 1 && s.division[i]) ? 0 : (i == 0 ? 0 : s.l[i - 1]);
    if (!use_ranges) return {lo, budget};
    int hi = budget;
    // witness: the genus-0 vertex before i with the fewest half edges can no
    // longer be stabilized by loops
    int z = -1, z_half = kNoBound;
    for (int v = 0; v < i; ++v) {
        if (s.g[v] != 0) continue;
        int half = s.n[v] + 2 * s.l[v];
        if (half < z_half) {
            z = v;
            z_half = half;
        }
    }
    if (z >= 0) hi = std::min(hi, budget + K - 3 + z_half);
    if (s.g[i] == 0) {
        if (K >= 2) {
            int n2_total = 0;
            for (int v = 0; v < K; ++v) {
                if (s.g[v] != 0) continue;
                n2_total += std::min(2, v < i ? s.n[v] + 2 * s.l[v] : s.n[v]);
            }
            int n2_i = std::min(2, s.n[i]);
            int rhs = 2 * budget + K + n2_total - n2_i - 2 * s.p1;
            // binds positive candidates only; l_i = 0 is always admitted here
            hi = std::min(hi, std::max(0, floor_div(rhs, 2)));
        }
        lo = std::max(lo, 4 - s.n[i] - G + static_cast<int>(s.sum_g) +
                              static_cast<int>(s.sum_l) - K);
    }
    return {lo, hi};
}

int lower_bound_a(const GeneratorState& s, int i, int j) {
    const int K = s.K;
    int from_row = (i == j - 1 || s.division[j]) ? 0 : s.a[static_cast<size_t>(i) * K + j - 1];
    int from_col = (i == 0 || s.division[i]) ? 0 : s.a[static_cast<size_t>(i - 1) * K + j];
    return std::max(from_row, from_col);
}

IntRange range_a(const GeneratorState& s, int i, int j, bool use_ranges) {
    const int G = s.type.genus, K = s.K;
    const int e_max = G - static_cast<int>(s.sum_g) - static_cast<int>(s.sum_l) -
                      static_cast<int>(s.sum_a) + K - 1;
    int lo = lower_bound_a(s, i, j);
    if (!use_ranges) return {lo, e_max};
    if (j == K - 1) {
        // last chance to add half edges to vertex i
        if (s.h[i] - s.n[i] - 2 * s.l[i] == 0) lo = std::max(lo, 1);
        if (s.g[i] == 0) lo = std::max(lo, 3 - s.h[i]);
    }
    int hi = e_max - std::max(0, K - 2 - s.c);
    int cap_i = (s.g[i] == 0) ? std::max(0, 3 - s.h[i]) : 0;
    int cap_j = (s.g[j] == 0) ? std::max(0, 3 - s.h[j]) : 0;
    // remaining deficit not coverable by this entry needs two half edges per
    // future edge
    hi = std::min(hi, floor_div(2 * e_max - s.stab_deficit + cap_i + cap_j, 2));
    return {lo, hi};
}

namespace {

class Generator {
public:
    Generator(GraphType t, int k, const MatrixSink* sink, bool use_ranges,
              std::vector<GnlPrefix>* prefix_out = nullptr)
        : s_(t, k), sink_(sink), use_ranges_(use_ranges), prefix_out_(prefix_out) {}

    uint64_t run() {
        fill_g(0);
        return emitted_;
    }

    uint64_t run_from(const GnlPrefix& p) {
        s_ = GeneratorState::from_prefix(p.type, p.K, p.g, p.n, p.l);
        assert(s_.division == p.division && s_.p1 == p.p1);
        s_.begin_a_phase();
        fill_a(0, 1);
        return emitted_;
    }

private:
    void fill_g(int i) {
        if (i == s_.K) {
            fill_n(0);
            return;
        }
        IntRange r = range_g(s_, i, use_ranges_);
        for (int v = r.lo; v <= r.hi; ++v) {
            uint8_t div_old = s_.division[i];
            s_.g[i] = v;
            s_.sum_g += v;
            if (v == 0) ++s_.p1;
            if (i >= 1 && v > s_.g[i - 1]) s_.division[i] = 1;
            ++s_.filled_g;
            fill_g(i + 1);
            --s_.filled_g;
            s_.division[i] = div_old;
            if (v == 0) --s_.p1;
            s_.sum_g -= v;
        }
    }

    void fill_n(int i) {
        if (i == s_.K) {
            // the marked-point total is already final here
            if (s_.sum_n == s_.type.marked) fill_l(0);
            return;
        }
        IntRange r = range_n(s_, i, use_ranges_);
        for (int v = r.lo; v <= r.hi; ++v) {
            uint8_t div_old = s_.division[i];
            s_.n[i] = v;
            s_.sum_n += v;
            if (i >= 1 && v > s_.n[i - 1]) s_.division[i] = 1;
            ++s_.filled_n;
            fill_n(i + 1);
            --s_.filled_n;
            s_.division[i] = div_old;
            s_.sum_n -= v;
        }
    }

    void fill_l(int i) {
        if (i == s_.K) {
            if (prefix_out_) {
                prefix_out_->push_back(GnlPrefix{s_.type, s_.K, s_.g, s_.n, s_.l,
                                                 s_.division, s_.p1});
                return;
            }
            s_.begin_a_phase();
            fill_a(0, 1);
            return;
        }
        IntRange r = range_l(s_, i, use_ranges_);
        for (int v = r.lo; v <= r.hi; ++v) {
            uint8_t div_old = s_.division[i];
            s_.l[i] = v;
            s_.sum_l += v;
            if (i >= 1 && v > s_.l[i - 1]) s_.division[i] = 1;
            ++s_.filled_l;
            fill_l(i + 1);
            --s_.filled_l;
            s_.division[i] = div_old;
            s_.sum_l -= v;
        }
    }

    void fill_a(int i, int j) {
        const int K = s_.K;
        if (i == K - 1) {
            finish();
            return;
        }
        const int ni = (j + 1 < K) ? i : i + 1;
        const int nj = (j + 1 < K) ? j + 1 : i + 2;
        IntRange r = range_a(s_, i, j, use_ranges_);
        int* aij = &s_.a[static_cast<size_t>(i) * K + j];
        int* aji = &s_.a[static_cast<size_t>(j) * K + i];
        for (int v = r.lo; v <= r.hi; ++v) {
            uint8_t div_i = s_.division[i], div_j = s_.division[j];
            int deficit_old = s_.stab_deficit;
            *aij = v;
            *aji = v;
            s_.sum_a += v;
            if (s_.g[i] == 0)
                s_.stab_deficit += std::max(0, 3 - s_.h[i] - v) - std::max(0, 3 - s_.h[i]);
            if (s_.g[j] == 0)
                s_.stab_deficit += std::max(0, 3 - s_.h[j] - v) - std::max(0, 3 - s_.h[j]);
            s_.h[i] += v;
            s_.h[j] += v;
            if (v > 0) ++s_.c;
            if (i >= 1 && v > s_.a[static_cast<size_t>(i - 1) * K + j]) s_.division[i] = 1;
            if (i != j - 1 && v > s_.a[static_cast<size_t>(i) * K + j - 1]) s_.division[j] = 1;
            ++s_.a_filled;
            fill_a(ni, nj);
            --s_.a_filled;
            if (v > 0) --s_.c;
            s_.h[i] -= v;
            s_.h[j] -= v;
            s_.stab_deficit = deficit_old;
            s_.sum_a -= v;
            s_.division[i] = div_i;
            s_.division[j] = div_j;
        }
        *aij = 0;
        *aji = 0;
    }

    void finish() {
        StableGraphMatrix m(s_.K);
        m.g = s_.g;
        m.n = s_.n;
        m.l = s_.l;
        m.a = s_.a;
        if (!is_stable(m, s_.type)) return;
        assert(!find_breaking_position(m));
        ++emitted_;
        if (sink_) (*sink_)(m);
    }

    GeneratorState s_;
    const MatrixSink* sink_;
    bool use_ranges_;
    std::vector<GnlPrefix>* prefix_out_;
    uint64_t emitted_ = 0;
};

}  // namespace

EnumerationReport enumerate_graphs(GraphType t, int K, const MatrixSink& sink, bool use_ranges) {
    if (!t.valid()) throw std::invalid_argument("2G + N - 2 must be positive");
    if (K < 1 || K > max_vertices(t)) throw std::invalid_argument("vertex count out of range");
    EnumerationReport rep;
    rep.K = K;
    auto start = std::chrono::steady_clock::now();
    uint64_t fresh = 0;
    if (K == 1) {
        for (const StableGraphMatrix& m : one_vertex_graphs(t)) {
            ++rep.emitted;
            if (!sink || sink(m)) ++fresh;
        }
    } else {
        MatrixSink counting = [&](const StableGraphMatrix& m) {
            bool fresh_one = !sink || sink(m);
            fresh += fresh_one;
            return fresh_one;
        };
        Generator gen(t, K, &counting, use_ranges);
        rep.emitted = gen.run();
    }
    rep.distinct = fresh;
    rep.duplicates = rep.emitted - fresh;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<EnumerationReport> enumerate_all(GraphType t, const MatrixSink& sink,
                                             bool use_ranges) {
    std::vector<EnumerationReport> reports;
    const int kmax = max_vertices(t);
    reports.reserve(kmax);
    for (int K = 1; K <= kmax; ++K) reports.push_back(enumerate_graphs(t, K, sink, use_ranges));
    return reports;
}

std::vector<GnlPrefix> enumerate_prefixes(GraphType t, int K, bool use_ranges) {
    if (!t.valid()) throw std::invalid_argument("2G + N - 2 must be positive");
    if (K < 2 || K > max_vertices(t)) return {};
    std::vector<GnlPrefix> out;
    Generator gen(t, K, nullptr, use_ranges, &out);
    gen.run();
    return out;
}

uint64_t enumerate_from_prefix(const GnlPrefix& p, const MatrixSink& sink, bool use_ranges) {
    uint64_t fresh = 0;
    MatrixSink counting = [&](const StableGraphMatrix& m) {
        bool fresh_one = !sink || sink(m);
        fresh += fresh_one;
        return fresh_one;
    };
    Generator gen(p.type, p.K, &counting, use_ranges);
    return gen.run_from(p);
}

}  // namespace stablegraphs

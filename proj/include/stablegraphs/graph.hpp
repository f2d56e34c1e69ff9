#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace stablegraphs {

/// Target type of the enumeration: total genus G with N unordered marked
/// points. Only types with 2G + N - 2 > 0 are meaningful.
struct GraphType {
    int genus = 0;
    int marked = 0;

    bool valid() const { return genus >= 0 && marked >= 0 && 2 * genus + marked - 2 > 0; }
};

inline bool operator==(GraphType a, GraphType b) {
    return a.genus == b.genus && a.marked == b.marked;
}

/// A stable graph candidate on K vertices: per-vertex genus g, marked points
/// n, loops l, and the symmetric adjacency matrix a with a[j][j] == l[j].
/// Entries referenced outside [0,K) read as 0.
class StableGraphMatrix {
public:
    StableGraphMatrix() = default;

    explicit StableGraphMatrix(int k)
        : K(k), g(k, 0), n(k, 0), l(k, 0), a(static_cast<size_t>(k) * k, 0) {
        if (k < 1) throw std::invalid_argument("vertex count must be >= 1");
    }

    /// Builds the matrix from the vectors and the strict upper triangle of a,
    /// given row by row: (0,1)...(0,K-1),(1,2),...
    static StableGraphMatrix from_upper(std::vector<int> g, std::vector<int> n,
                                        std::vector<int> l, const std::vector<int>& upper);

    static StableGraphMatrix single_vertex(int genus, int marked, int loops);

    int vertex_count() const { return K; }

    int at(int i, int j) const {
        if (i < 0 || j < 0 || i >= K || j >= K) return 0;
        return a[static_cast<size_t>(i) * K + j];
    }
    int& entry(int i, int j) { return a[static_cast<size_t>(i) * K + j]; }

    int genus_of(int j) const { return (j < 0 || j >= K) ? 0 : g[j]; }
    int marks_of(int j) const { return (j < 0 || j >= K) ? 0 : n[j]; }
    int loops_of(int j) const { return (j < 0 || j >= K) ? 0 : l[j]; }

    /// 2*l[j] + sum of off-diagonal multiplicities at j.
    int degree(int j) const;

    /// Number of edges, loops included.
    int edge_count() const;

    /// Symmetry, diagonal == l, nonnegative entries.
    bool structurally_valid() const;

    int K = 0;
    std::vector<int> g, n, l;
    std::vector<int> a;  // K*K row-major, symmetric, diagonal = l
};

bool operator==(const StableGraphMatrix& x, const StableGraphMatrix& y);
inline bool operator!=(const StableGraphMatrix& x, const StableGraphMatrix& y) { return !(x == y); }

/// Entry of the big (K+3)xK matrix witnessing that adjacent columns are out
/// of order. For kind adjacency, row is the index i of the a-row; for the
/// other kinds it is the big-matrix row (0, 1 or 2).
struct BreakingPosition {
    enum class Kind { genus, marks, loops, adjacency };
    Kind kind = Kind::genus;
    int row = 0;
    int column = 0;
};

inline bool operator==(const BreakingPosition& p, const BreakingPosition& q) {
    return p.kind == q.kind && p.row == q.row && p.column == q.column;
}

/// Sum of vertex genera plus |E| - (K-1).
int total_genus(const StableGraphMatrix& m);

/// Connectivity of the multigraph on positive off-diagonal entries; loops
/// are irrelevant and K = 1 counts as connected.
bool is_connected(const StableGraphMatrix& m);

/// All five defining conditions against the requested type.
bool is_stable(const StableGraphMatrix& m, GraphType t);

/// g, n, l followed by the strict upper triangle of a in row-major order;
/// length 3K + K(K-1)/2.
std::vector<int> flatten(const StableGraphMatrix& m);

/// Lexicographic comparison of the flattenings. Defined only within fixed K;
/// throws std::invalid_argument otherwise.
bool precedes(const StableGraphMatrix& m1, const StableGraphMatrix& m2);

/// Applies the transposition of vertices j-1 and j: swaps the entries in g,
/// n, l and simultaneously rows and columns j-1, j of a. Requires 1 <= j < K.
StableGraphMatrix apply_transposition(const StableGraphMatrix& m, int j);

/// First out-of-order witness scanning columns j = 1..K-1 and, within a
/// column pair, g, n, l, then a rows i = 0..K-1 skipping i in {j-1, j}.
/// Empty result iff the matrix is in generated form.
std::optional<BreakingPosition> find_breaking_position(const StableGraphMatrix& m);

/// Repeatedly transposes at the reported breaking column until none is left.
/// Each step strictly decreases the matrix, so this terminates; the result is
/// isomorphic to the input.
StableGraphMatrix reduce_to_generated_form(StableGraphMatrix m);

}  // namespace stablegraphs

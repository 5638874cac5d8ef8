#ifndef GPARKING_MULTIGRAPH_HPP
#define GPARKING_MULTIGRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gparking {

// Edge {u,v}_color of a multigraph. Parallel edges between the same endpoint
// pair carry colors 0..mu(u,v)-1; loops are stored with u == v.
struct ColoredEdge {
    int u = 0;
    int v = 0;
    int color = 0;

    ColoredEdge() = default;
    ColoredEdge(int a, int b, int c = 0) : u(std::min(a, b)), v(std::max(a, b)), color(c) {}

    bool is_loop() const { return u == v; }
    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

enum class EdgeKind { loop, bridge, ordinary };

// Undirected multigraph on vertices {0..n}; vertex 0 is the root.
// Only edge multiplicities are stored: colors within a parallel class are
// implicitly canonical 0..mu-1, so contraction and deletion recolor for free.
class Multigraph {
public:
    explicit Multigraph(int vertex_count) : n_(vertex_count), mult_(), total_edges_(0) {
        if (vertex_count <= 0)
            throw std::invalid_argument("Multigraph: vertex_count must be positive");
        mult_.assign(static_cast<size_t>(n_) * n_, 0);
    }

    static Multigraph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
        Multigraph g(vertex_count);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    // Non-root vertices, the n of the vertex set {0..n}.
    int non_root_count() const { return n_ - 1; }
    int total_edges() const { return total_edges_; }

    int multiplicity(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return mult_[static_cast<size_t>(i) * n_ + j];
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        mult_[static_cast<size_t>(u) * n_ + v] += 1;
        if (u != v) mult_[static_cast<size_t>(v) * n_ + u] += 1;
        ++total_edges_;
    }

    bool has_edge(const ColoredEdge& e) const {
        return e.u >= 0 && e.v < n_ && e.color >= 0 && e.color < multiplicity(e.u, e.v);
    }

    // Degree ignoring loops: sum of mu(v,w) over w != v. Loops never count
    // toward any outdeg, so this is the relevant bound everywhere.
    int loopless_degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < n_; ++w)
            if (w != v) d += mult_[static_cast<size_t>(v) * n_ + w];
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int w = 0; w < n_; ++w)
            if (w != v && mult_[static_cast<size_t>(v) * n_ + w] > 0) out.push_back(w);
        return out;
    }

    // Connectivity of the loop-free skeleton.
    bool skeleton_connected() const {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n_; ++w) {
                if (w != v && !seen[w] && mult_[static_cast<size_t>(v) * n_ + w] > 0) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n_;
    }

    EdgeKind classify_edge(const ColoredEdge& e) const {
        require_edge(e);
        if (e.is_loop()) return EdgeKind::loop;
        if (multiplicity(e.u, e.v) > 1) return EdgeKind::ordinary;  // a parallel copy survives
        return delete_edge(e).skeleton_connected() ? EdgeKind::ordinary : EdgeKind::bridge;
    }

    // Delete one copy of e. Remaining colors of the class close up to
    // 0..mu-2, which the multiplicity representation does implicitly.
    Multigraph delete_edge(const ColoredEdge& e) const {
        require_edge(e);
        Multigraph g(*this);
        g.mult_[static_cast<size_t>(e.u) * n_ + e.v] -= 1;
        if (!e.is_loop()) g.mult_[static_cast<size_t>(e.v) * n_ + e.u] -= 1;
        g.total_edges_ -= 1;
        return g;
    }

    // Contract e = {i,j}, i < j: merge j into i, drop the contracted copy,
    // turn surviving parallel {i,j} copies into loops at i, and shift labels
    // above j down so the vertex set stays {0..m}. |E| drops by exactly one.
    Multigraph contract_edge(const ColoredEdge& e) const {
        require_edge(e);
        if (e.is_loop()) throw std::invalid_argument("contract_edge: cannot contract a loop");
        const int i = e.u, j = e.v;
        Multigraph g(n_ - 1);
        auto remap = [&](int w) { return w == j ? i : (w > j ? w - 1 : w); };
        for (int a = 0; a < n_; ++a) {
            for (int b = a; b < n_; ++b) {
                int m = mult_[static_cast<size_t>(a) * n_ + b];
                if (a == i && b == j) m -= 1;  // the contracted copy
                for (int k = 0; k < m; ++k) g.add_edge(remap(a), remap(b));
            }
        }
        return g;
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Multigraph: vertex " + std::to_string(v) + " out of range");
    }
    void require_edge(const ColoredEdge& e) const {
        check_vertex(e.u);
        check_vertex(e.v);
        if (!has_edge(e))
            throw std::invalid_argument("Multigraph: no edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}_" + std::to_string(e.color));
    }

    int n_;
    std::vector<int> mult_;  // symmetric n x n, loops on the diagonal
    int total_edges_;
};

inline Multigraph build_multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    return Multigraph::from_edges(vertex_count, edges);
}

inline Multigraph complete_graph(int vertex_count) {
    Multigraph g(vertex_count);
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j) g.add_edge(i, j);
    return g;
}

// outdeg_{I,G}(v): edges (with multiplicity) from v to vertices outside I.
// Requires v in I and 0 not in I; loops never contribute since v is in I.
inline int out_degree(const Multigraph& g, const std::vector<int>& subset, int v) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int w : subset) {
        if (w <= 0 || w >= g.vertex_count())
            throw std::invalid_argument("out_degree: subset must contain non-root vertices only");
        in[w] = 1;
    }
    if (!in[v]) throw std::invalid_argument("out_degree: v must belong to the subset");
    int d = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!in[w]) d += g.multiplicity(v, w);
    return d;
}

namespace detail {

// Same as out_degree but with I encoded as a bitmask over vertices 1..n
// (bit v-1 set iff v in I). Hot path of the criticality module.
inline int out_degree_mask(const Multigraph& g, unsigned long long mask, int v) {
    int d = 0;
    for (int w = 0; w < g.vertex_count(); ++w) {
        bool in_subset = w > 0 && (mask >> (w - 1) & 1ull);
        if (!in_subset) d += g.multiplicity(v, w);
    }
    return d;
}

}  // namespace detail

// Number of spanning trees, counting parallel edges as distinct; loops
// contribute nothing. Matrix-Tree over the integers: determinant of the
// reduced Laplacian by Bareiss fraction-free elimination, so the result
// is exact.
inline long long count_spanning_trees(const Multigraph& g) {
    if (!g.skeleton_connected())
        throw std::invalid_argument("count_spanning_trees: graph is disconnected");
    const int n = g.non_root_count();
    if (n == 0) return 1;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int v = 1; v <= n; ++v) {
        for (int w = 1; w <= n; ++w)
            m[v - 1][w - 1] = (v == w) ? g.loopless_degree(v) : -g.multiplicity(v, w);
    }
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Vertex ranking tau: a permutation of {1..n} fixing the tie-breaking
// priority of the algorithms; smaller rank means higher priority. The root
// is outside the ranking and always has priority 0.
class VertexRanking {
public:
    // tau_values[k] = tau(k+1); must be a permutation of {1..n}.
    explicit VertexRanking(std::vector<int> tau_values) : rank_(std::move(tau_values)) {
        std::vector<char> seen(rank_.size() + 1, 0);
        for (int r : rank_) {
            if (r < 1 || r > static_cast<int>(rank_.size()) || seen[r])
                throw std::invalid_argument("VertexRanking: not a permutation of 1..n");
            seen[r] = 1;
        }
    }

    static VertexRanking identity(int n) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = i + 1;
        return VertexRanking(std::move(t));
    }

    static VertexRanking reversal(int n) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = n - i;
        return VertexRanking(std::move(t));
    }

    int size() const { return static_cast<int>(rank_.size()); }

    int rank(int v) const {
        if (v == 0) return 0;
        if (v < 1 || v > size()) throw std::invalid_argument("VertexRanking: vertex out of range");
        return rank_[v - 1];
    }

    const std::vector<int>& values() const { return rank_; }

    friend bool operator==(const VertexRanking&, const VertexRanking&) = default;

private:
    std::vector<int> rank_;
};

}  // namespace gparking

#endif  // GPARKING_MULTIGRAPH_HPP

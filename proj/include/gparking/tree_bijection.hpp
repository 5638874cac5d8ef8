#ifndef GPARKING_TREE_BIJECTION_HPP
#define GPARKING_TREE_BIJECTION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "gparking/multigraph.hpp"

namespace gparking {

// A labeling f: V -> Z indexed by vertex, with f[0] == -1 for valid
// G-parking functions.
using ParkingFunction = std::vector<int>;

// Spanning tree of a multigraph rooted at 0, remembering which parallel
// copy (color) links each non-root vertex to its predecessor.
struct ColoredSpanningTree {
    std::vector<int> parent;  // parent[v] for v in 1..n; parent[0] == -1
    std::vector<int> color;   // color[v] < mu(v, parent[v]); color[0] == -1

    friend bool operator==(const ColoredSpanningTree&, const ColoredSpanningTree&) = default;
};

// Processing order produced by the algorithms: sequence[0] == 0 (the root),
// sequence[i] == v_i, and position inverts it with position[0] == 0.
struct VertexOrder {
    std::vector<int> sequence;
    std::vector<int> position;

    friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
        return a.sequence == b.sequence;
    }
};

struct TreeAndOrder {
    ColoredSpanningTree tree;
    VertexOrder order;
};

namespace detail {

inline void check_labeling_shape(const Multigraph& g, const ParkingFunction& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("labeling size must equal the vertex count");
    if (f[0] != -1) throw std::invalid_argument("labeling must have f(0) = -1");
    for (int v = 1; v < g.vertex_count(); ++v)
        if (f[v] < 0) throw std::invalid_argument("labeling must be nonnegative off the root");
}

}  // namespace detail

// One pass of Algorithm A. Starting from Q = {0}, repeatedly process the
// tau-minimal queued vertex v; an unexplored neighbor w joins the tree via
// edge {w,v}_{val(w)} when val(w) <= mu(w,v)-1, otherwise val(w) drops by
// mu(w,v). Returns nullopt when the queue empties early, i.e. exactly when
// f is not a G-parking function; this is the fast membership test.
inline std::optional<TreeAndOrder> try_algorithm_a(const Multigraph& g, const VertexRanking& tau,
                                                   const ParkingFunction& f) {
    const int n = g.non_root_count();
    detail::check_labeling_shape(g, f);
    if (tau.size() != n) throw std::invalid_argument("ranking size must equal the non-root count");

    std::vector<int> val = f;
    enum : char { unseen, queued, done };
    std::vector<char> state(g.vertex_count(), unseen);
    std::vector<int> queue{0};
    state[0] = queued;

    TreeAndOrder out;
    out.tree.parent.assign(g.vertex_count(), -1);
    out.tree.color.assign(g.vertex_count(), -1);
    out.order.position.assign(g.vertex_count(), -1);
    out.order.sequence.reserve(g.vertex_count());

    while (!queue.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k)
            if (tau.rank(queue[k]) < tau.rank(queue[best])) best = k;
        const int v = queue[best];
        queue.erase(queue.begin() + best);
        state[v] = done;
        out.order.position[v] = static_cast<int>(out.order.sequence.size());
        out.order.sequence.push_back(v);

        for (int w = 1; w < g.vertex_count(); ++w) {
            if (state[w] != unseen) continue;
            const int mu = g.multiplicity(w, v);
            if (mu == 0) continue;
            if (val[w] <= mu - 1) {
                out.tree.parent[w] = v;
                out.tree.color[w] = val[w];
                state[w] = queued;
                queue.push_back(w);
            } else {
                val[w] -= mu;
            }
        }
    }

    if (static_cast<int>(out.order.sequence.size()) != g.vertex_count()) return std::nullopt;
    return out;
}

// Phi: G-parking function -> colored spanning tree, with the processing
// order Ord(f). Throws if f is not a G-parking function.
inline TreeAndOrder algorithm_a(const Multigraph& g, const VertexRanking& tau,
                                const ParkingFunction& f) {
    auto r = try_algorithm_a(g, tau, f);
    if (!r) throw std::invalid_argument("algorithm_a: not a G-parking function");
    return *r;
}

namespace detail {

inline std::vector<std::vector<int>> children_of(const Multigraph& g, const ColoredSpanningTree& t) {
    const int nv = g.vertex_count();
    if (static_cast<int>(t.parent.size()) != nv || static_cast<int>(t.color.size()) != nv)
        throw std::invalid_argument("tree arrays must match the vertex count");
    std::vector<std::vector<int>> children(nv);
    for (int v = 1; v < nv; ++v) {
        const int p = t.parent[v];
        if (p < 0 || p >= nv || p == v)
            throw std::invalid_argument("tree parent out of range");
        if (t.color[v] < 0 || t.color[v] >= g.multiplicity(v, p))
            throw std::invalid_argument("tree edge color not present in the graph");
        children[p].push_back(v);
    }
    // Every vertex must reach the root, otherwise parent links hide a cycle.
    for (int v = 1; v < nv; ++v) {
        int steps = 0, w = v;
        while (w != 0 && steps <= nv) { w = t.parent[w]; ++steps; }
        if (w != 0) throw std::invalid_argument("parent links do not form a tree rooted at 0");
    }
    return children;
}

}  // namespace detail

// The Algorithm B order: grow from the root, at each step taking the
// tau-minimal vertex of the tree frontier. Coincides with the Algorithm A
// processing order.
inline VertexOrder tree_order(const Multigraph& g, const VertexRanking& tau,
                              const ColoredSpanningTree& t) {
    auto children = detail::children_of(g, t);
    VertexOrder ord;
    ord.position.assign(g.vertex_count(), -1);
    ord.sequence.reserve(g.vertex_count());
    ord.sequence.push_back(0);
    ord.position[0] = 0;
    std::vector<int> frontier = children[0];
    while (!frontier.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < frontier.size(); ++k)
            if (tau.rank(frontier[k]) < tau.rank(frontier[best])) best = k;
        const int v = frontier[best];
        frontier.erase(frontier.begin() + best);
        ord.position[v] = static_cast<int>(ord.sequence.size());
        ord.sequence.push_back(v);
        frontier.insert(frontier.end(), children[v].begin(), children[v].end());
    }
    return ord;
}

// Theta, the inverse of Phi: recover f from a colored spanning tree.
// f(v) = color of the edge to pre(v) plus the number of edges (with
// multiplicity) from v to vertices placed strictly before pre(v).
inline ParkingFunction theta_parking(const Multigraph& g, const VertexRanking& tau,
                                     const ColoredSpanningTree& t) {
    if (tau.size() != g.non_root_count())
        throw std::invalid_argument("ranking size must equal the non-root count");
    VertexOrder ord = tree_order(g, tau, t);
    ParkingFunction f(g.vertex_count(), 0);
    f[0] = -1;
    for (int v = 1; v < g.vertex_count(); ++v) {
        const int before_parent = ord.position[t.parent[v]];
        int acc = t.color[v];
        for (int w = 0; w < g.vertex_count(); ++w)
            if (ord.position[w] < before_parent) acc += g.multiplicity(v, w);
        f[v] = acc;
    }
    return f;
}

// Ord(f): the order in which Algorithm A places vertices into P.
inline VertexOrder ord(const Multigraph& g, const VertexRanking& tau, const ParkingFunction& f) {
    return algorithm_a(g, tau, f).order;
}

// Rea(f): f read in processing order, serialized with the leading -1 of the
// root so it lines up with Ord's leading 0.
inline std::vector<int> rea(const Multigraph& g, const VertexRanking& tau, const ParkingFunction& f) {
    VertexOrder o = ord(g, tau, f);
    std::vector<int> out;
    out.reserve(o.sequence.size());
    for (int v : o.sequence) out.push_back(f[v]);
    return out;
}

}  // namespace gparking

#endif  // GPARKING_TREE_BIJECTION_HPP

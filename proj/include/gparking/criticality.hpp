#ifndef GPARKING_CRITICALITY_HPP
#define GPARKING_CRITICALITY_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gparking/multigraph.hpp"
#include "gparking/parking.hpp"
#include "gparking/tree_bijection.hpp"

namespace gparking {

// The full set P_G for one (G, tau), with Ord(f) cached per function.
// Everything in this module filters this snapshot, so computing it once and
// passing it around keeps the desk-scale sweeps affordable.
class ParkingFamily {
public:
    ParkingFamily(Multigraph g, VertexRanking tau, unsigned threads = 1)
        : graph_(std::move(g)), tau_(std::move(tau)) {
        if (tau_.size() != graph_.non_root_count())
            throw std::invalid_argument("ParkingFamily: ranking size must equal the non-root count");
        functions_ = enumerate_parking(graph_, threads);
        orders_.reserve(functions_.size());
        for (const auto& f : functions_) orders_.push_back(algorithm_a(graph_, tau_, f).order);
    }

    const Multigraph& graph() const { return graph_; }
    const VertexRanking& ranking() const { return tau_; }
    const std::vector<ParkingFunction>& functions() const { return functions_; }
    const VertexOrder& order(size_t idx) const { return orders_[idx]; }
    size_t size() const { return functions_.size(); }

private:
    Multigraph graph_;
    VertexRanking tau_;
    std::vector<ParkingFunction> functions_;
    std::vector<VertexOrder> orders_;
};

namespace detail {

// Bitmask of the Ord-suffix I_v = {Ord(f)_j : j >= i}, encoded over 1..n.
inline std::uint64_t suffix_mask(const VertexOrder& ord, int i) {
    std::uint64_t mask = 0;
    for (size_t j = i; j < ord.sequence.size(); ++j)
        mask |= 1ull << (ord.sequence[j] - 1);
    return mask;
}

inline std::vector<int> critical_with_order(const Multigraph& g, const VertexOrder& ord,
                                            const ParkingFunction& f) {
    std::vector<int> crit{0};  // the root is f-critical by convention
    for (int i = 1; i < static_cast<int>(ord.sequence.size()); ++i) {
        const int v = ord.sequence[i];
        if (f[v] == out_degree_mask(g, suffix_mask(ord, i), v) - 1) crit.push_back(v);
    }
    std::sort(crit.begin(), crit.end());
    return crit;
}

// Membership predicate for the weak v-identical set of f, evaluated against
// candidate g. Two conditions:
//   (1) g agrees with f on the Ord-prefix before v, both in order and value;
//   (2) g(w) >= outdeg_{I_v}(w) for every w in I_v ranked before v.
// Adding the value clause g(v) >= f(v) would shrink W and S by the same
// functions, so the bridge statistic |W| = |S| is unaffected.
struct WeakStrongFilter {
    const Multigraph* g;
    const VertexOrder* ord_f;
    const ParkingFunction* f;
    int v;
    int i;                                      // position of v in Ord(f)
    std::vector<std::pair<int, int>> thresholds;  // (w, outdeg_{I_v}(w)) for tau(w) < tau(v)

    WeakStrongFilter(const Multigraph& graph, const VertexRanking& tau, const VertexOrder& of,
                     const ParkingFunction& func, int vertex)
        : g(&graph), ord_f(&of), f(&func), v(vertex), i(of.position[vertex]) {
        const std::uint64_t mask = suffix_mask(of, i);
        for (size_t j = i; j < of.sequence.size(); ++j) {
            const int w = of.sequence[j];
            if (tau.rank(w) < tau.rank(v))
                thresholds.emplace_back(w, out_degree_mask(*g, mask, w));
        }
    }

    bool weak(const ParkingFunction& cand, const VertexOrder& ord_cand) const {
        for (int j = 1; j < i; ++j) {
            const int w = ord_f->sequence[j];
            if (ord_cand.sequence[j] != w || cand[w] != (*f)[w]) return false;
        }
        for (const auto& [w, thr] : thresholds)
            if (cand[w] < thr) return false;
        return true;
    }

    bool strong(const ParkingFunction& cand, const VertexOrder& ord_cand) const {
        return weak(cand, ord_cand) && ord_cand.sequence[i] == v;
    }
};

}  // namespace detail

// The set C_f of f-critical vertices: v with f(v) = outdeg_{I_v}(v) - 1
// where I_v is the Ord(f)-suffix starting at v. Contains 0 by convention.
inline std::vector<int> critical_vertices(const Multigraph& g, const VertexRanking& tau,
                                          const ParkingFunction& f) {
    return detail::critical_with_order(g, algorithm_a(g, tau, f).order, f);
}

// W_{v,f}: G-parking functions weak v-identical to f, in enumeration order.
inline std::vector<ParkingFunction> weak_identical(const ParkingFamily& family,
                                                   const ParkingFunction& f, int v) {
    if (v <= 0 || v > family.graph().non_root_count())
        throw std::invalid_argument("weak_identical: v must be a non-root vertex");
    const VertexOrder of = algorithm_a(family.graph(), family.ranking(), f).order;
    detail::WeakStrongFilter filter(family.graph(), family.ranking(), of, f, v);
    std::vector<ParkingFunction> out;
    for (size_t k = 0; k < family.size(); ++k)
        if (filter.weak(family.functions()[k], family.order(k))) out.push_back(family.functions()[k]);
    return out;
}

inline std::vector<ParkingFunction> weak_identical(const Multigraph& g, const VertexRanking& tau,
                                                   const ParkingFunction& f, int v) {
    return weak_identical(ParkingFamily(g, tau), f, v);
}

// S_{v,f}: the weak v-identical functions with Ord(g)_i = v. Always a subset
// of W_{v,f} and always contains f itself.
inline std::vector<ParkingFunction> strong_identical(const ParkingFamily& family,
                                                     const ParkingFunction& f, int v) {
    if (v <= 0 || v > family.graph().non_root_count())
        throw std::invalid_argument("strong_identical: v must be a non-root vertex");
    const VertexOrder of = algorithm_a(family.graph(), family.ranking(), f).order;
    detail::WeakStrongFilter filter(family.graph(), family.ranking(), of, f, v);
    std::vector<ParkingFunction> out;
    for (size_t k = 0; k < family.size(); ++k)
        if (filter.strong(family.functions()[k], family.order(k))) out.push_back(family.functions()[k]);
    return out;
}

inline std::vector<ParkingFunction> strong_identical(const Multigraph& g, const VertexRanking& tau,
                                                     const ParkingFunction& f, int v) {
    return strong_identical(ParkingFamily(g, tau), f, v);
}

// B(f) and b(f) = |B(f)|: the f-bridge vertices, i.e. critical non-root
// vertices whose weak and strong identical sets have equal size.
struct BridgeStats {
    std::vector<int> vertices;  // sorted
    int b = 0;
};

inline BridgeStats bridge_vertices(const ParkingFamily& family, const ParkingFunction& f) {
    const Multigraph& g = family.graph();
    const VertexOrder of = algorithm_a(g, family.ranking(), f).order;
    BridgeStats stats;
    for (int v : detail::critical_with_order(g, of, f)) {
        if (v == 0) continue;  // the root is critical but never an f-bridge
        detail::WeakStrongFilter filter(g, family.ranking(), of, f, v);
        size_t weak = 0, strong = 0;
        for (size_t k = 0; k < family.size(); ++k) {
            if (filter.weak(family.functions()[k], family.order(k))) {
                ++weak;
                if (family.order(k).sequence[filter.i] == v) ++strong;
            }
        }
        if (weak == strong) stats.vertices.push_back(v);
    }
    stats.b = static_cast<int>(stats.vertices.size());
    return stats;
}

inline BridgeStats bridge_vertices(const Multigraph& g, const VertexRanking& tau,
                                   const ParkingFunction& f) {
    return bridge_vertices(ParkingFamily(g, tau), f);
}

namespace detail {

inline int contraction_partner(const Multigraph& g, const ColoredEdge& e) {
    if (e.u != 0) throw std::invalid_argument("edge must be incident to the root");
    if (e.is_loop()) throw std::invalid_argument("edge must not be a loop");
    if (!g.has_edge(e)) throw std::invalid_argument("edge not present in the graph");
    return e.v;
}

}  // namespace detail

// Contraction map phi: for e = {0,u} and f with f(u) = 0, the bijection
// onto P_{G\e} that forgets u's value. Vertex labels above u shift down by
// one, matching contract_edge's relabeling. Weights are preserved.
inline ParkingFunction phi_contract(const Multigraph& g, const ColoredEdge& e,
                                    const ParkingFunction& f) {
    const int u = detail::contraction_partner(g, e);
    if (!is_parking(g, f)) throw std::invalid_argument("phi_contract: f is not a G-parking function");
    if (f[u] != 0) throw std::invalid_argument("phi_contract: requires f(u) = 0");
    ParkingFunction out;
    out.reserve(f.size() - 1);
    for (int w = 0; w < static_cast<int>(f.size()); ++w)
        if (w != u) out.push_back(f[w]);
    return out;
}

// Deletion map psi: for e = {0,u} and f with f(u) >= 1, decrement f(u); the
// result is a (G-e)-parking function of the same weight.
inline ParkingFunction psi_delete(const Multigraph& g, const ColoredEdge& e,
                                  const ParkingFunction& f) {
    const int u = detail::contraction_partner(g, e);
    if (!is_parking(g, f)) throw std::invalid_argument("psi_delete: f is not a G-parking function");
    if (f[u] < 1) throw std::invalid_argument("psi_delete: requires f(u) >= 1");
    ParkingFunction out = f;
    out[u] -= 1;
    return out;
}

}  // namespace gparking

#endif  // GPARKING_CRITICALITY_HPP

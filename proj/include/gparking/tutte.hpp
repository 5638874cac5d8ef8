#ifndef GPARKING_TUTTE_HPP
#define GPARKING_TUTTE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gparking/bivariate_polynomial.hpp"
#include "gparking/criticality.hpp"
#include "gparking/multigraph.hpp"
#include "gparking/parking.hpp"

namespace gparking {

// T_G(x,y) as the generating function of G-parking functions by bridge
// count and weight: sum over f in P_G of x^{b(f)} y^{w(f)}. Independent of
// the ranking tau.
inline BivariatePolynomial tutte_parking(const ParkingFamily& family) {
    BivariatePolynomial out;
    for (const auto& f : family.functions())
        out.add_term(bridge_vertices(family, f).b, weight_w(family.graph(), f), 1);
    return out;
}

inline BivariatePolynomial tutte_parking(const Multigraph& g, const VertexRanking& tau,
                                         unsigned threads = 1) {
    return tutte_parking(ParkingFamily(g, tau, threads));
}

namespace detail {

// Memo key: vertex count followed by the upper triangle of the multiplicity
// matrix under the current labeling. No isomorphism reduction.
inline std::vector<int> graph_key(const Multigraph& g) {
    std::vector<int> key{g.vertex_count()};
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i; j < g.vertex_count(); ++j) key.push_back(g.multiplicity(i, j));
    return key;
}

inline const BivariatePolynomial& tutte_delcon_rec(const Multigraph& g,
                                                   std::map<std::vector<int>, BivariatePolynomial>& memo) {
    const auto key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    BivariatePolynomial result;
    ColoredEdge e;
    bool found = false;
    for (int i = 0; i < g.vertex_count() && !found; ++i)
        for (int j = i; j < g.vertex_count() && !found; ++j)
            if (g.multiplicity(i, j) > 0) {
                e = ColoredEdge(i, j, 0);
                found = true;
            }
    if (!found) {
        result = BivariatePolynomial::constant(1);  // edgeless single vertex
    } else {
        switch (g.classify_edge(e)) {
            case EdgeKind::loop:
                result = BivariatePolynomial::monomial(0, 1) * tutte_delcon_rec(g.delete_edge(e), memo);
                break;
            case EdgeKind::bridge:
                result = BivariatePolynomial::monomial(1, 0) * tutte_delcon_rec(g.contract_edge(e), memo);
                break;
            case EdgeKind::ordinary:
                result = tutte_delcon_rec(g.contract_edge(e), memo);
                result += tutte_delcon_rec(g.delete_edge(e), memo);
                break;
        }
    }
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

// Independent Tutte polynomial oracle by deletion-contraction: loops give a
// factor y, bridges a factor x, and any other edge splits into contraction
// plus deletion. The pivot edge is always the lexicographically first
// endpoint pair, color 0.
inline BivariatePolynomial tutte_delcon(const Multigraph& g) {
    if (!g.skeleton_connected())
        throw std::invalid_argument("tutte_delcon: graph is disconnected");
    std::map<std::vector<int>, BivariatePolynomial> memo;
    return detail::tutte_delcon_rec(g, memo);
}

// The multiset BW_G = {(b(f), w(f)) : f in P_G}, sorted; invariant under
// the choice of ranking.
inline std::vector<std::pair<int, int>> bw_multiset(const ParkingFamily& family) {
    std::vector<std::pair<int, int>> out;
    out.reserve(family.size());
    for (const auto& f : family.functions())
        out.emplace_back(bridge_vertices(family, f).b, weight_w(family.graph(), f));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<int, int>> bw_multiset(const Multigraph& g, const VertexRanking& tau,
                                                    unsigned threads = 1) {
    return bw_multiset(ParkingFamily(g, tau, threads));
}

}  // namespace gparking

#endif  // GPARKING_TUTTE_HPP

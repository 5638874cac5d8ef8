#ifndef GPARKING_PARKING_HPP
#define GPARKING_PARKING_HPP

#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gparking/multigraph.hpp"
#include "gparking/tree_bijection.hpp"

namespace gparking {

enum class ParkingFailure {
    none,             // f is a G-parking function
    bad_root_value,   // f(0) != -1 (or wrong shape)
    subset_violation  // some subset I has no vertex with f(v) < outdeg_I(v)
};

struct ParkingCheck {
    ParkingFailure failure = ParkingFailure::none;
    std::vector<int> witness;  // a violating subset I, when one exists

    bool ok() const { return failure == ParkingFailure::none; }
};

// Reference membership test straight from the definition: every nonempty
// I subseteq V\{0} must contain a vertex v with 0 <= f(v) < outdeg_I(v).
// Exponential in n; kept as the cross-validation oracle for the fast path.
inline ParkingCheck check_parking_by_subsets(const Multigraph& g, const ParkingFunction& f) {
    if (!g.skeleton_connected())
        throw std::invalid_argument("check_parking_by_subsets: graph is disconnected");
    const int n = g.non_root_count();
    if (static_cast<int>(f.size()) != g.vertex_count() || f[0] != -1)
        return {ParkingFailure::bad_root_value, {}};
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool found = false;
        for (int v = 1; v <= n && !found; ++v) {
            if (!(mask >> (v - 1) & 1ull)) continue;
            if (f[v] >= 0 && f[v] < detail::out_degree_mask(g, mask, v)) found = true;
        }
        if (!found) {
            std::vector<int> witness;
            for (int v = 1; v <= n; ++v)
                if (mask >> (v - 1) & 1ull) witness.push_back(v);
            return {ParkingFailure::subset_violation, witness};
        }
    }
    return {};
}

inline bool is_parking_by_subsets(const Multigraph& g, const ParkingFunction& f) {
    return check_parking_by_subsets(g, f).ok();
}

// Fast-path membership: f is a G-parking function iff Algorithm A consumes
// all vertices. Agreement with the subset test is a library invariant.
inline bool is_parking(const Multigraph& g, const ParkingFunction& f) {
    if (!g.skeleton_connected())
        throw std::invalid_argument("is_parking: graph is disconnected");
    if (static_cast<int>(f.size()) != g.vertex_count() || f[0] != -1) return false;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (f[v] < 0) return false;
    return try_algorithm_a(g, VertexRanking::identity(g.non_root_count()), f).has_value();
}

namespace detail {

// Mixed-radix decoding of the candidate box prod_v [0, loopless_degree(v)).
inline ParkingFunction box_candidate(const std::vector<int>& bounds, std::uint64_t index) {
    ParkingFunction f(bounds.size() + 1);
    f[0] = -1;
    for (size_t v = bounds.size(); v >= 1; --v) {
        f[v] = static_cast<int>(index % bounds[v - 1]);
        index /= bounds[v - 1];
    }
    return f;
}

}  // namespace detail

// All G-parking functions of a connected multigraph, in lexicographic order
// of (f(1),...,f(n)). Candidates range over the box [0, deg(v)-1] per vertex
// (degrees ignoring loops) and are filtered by the fast-path test. The box
// scan may be split across threads; chunks are merged in index order, so the
// output is identical for every thread count.
inline std::vector<ParkingFunction> enumerate_parking(const Multigraph& g, unsigned threads = 1) {
    if (!g.skeleton_connected())
        throw std::invalid_argument("enumerate_parking: graph is disconnected");
    const int n = g.non_root_count();
    if (n == 0) return {ParkingFunction{-1}};

    std::vector<int> bounds(n);
    std::uint64_t total = 1;
    for (int v = 1; v <= n; ++v) {
        bounds[v - 1] = g.loopless_degree(v);
        total *= static_cast<std::uint64_t>(bounds[v - 1]);
    }

    const VertexRanking tau = VertexRanking::identity(n);
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<ParkingFunction> found;
        ParkingFunction f = detail::box_candidate(bounds, lo);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (try_algorithm_a(g, tau, f).has_value()) found.push_back(f);
            // increment the mixed-radix counter in place
            for (int v = n; v >= 1; --v) {
                if (++f[v] < bounds[v - 1]) break;
                f[v] = 0;
            }
        }
        return found;
    };

    if (threads <= 1 || total < 2 * threads) return scan(0, total);

    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::future<std::vector<ParkingFunction>>> parts;
    for (std::uint64_t lo = 0; lo < total; lo += chunk) {
        const std::uint64_t hi = std::min(total, lo + chunk);
        parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    std::vector<ParkingFunction> out;
    for (auto& p : parts) {
        auto part = p.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// w(f) = |E(G)| - |V(G)| - sum_i f(i); nonnegative on G-parking functions
// of connected graphs and plays the role of external activity.
inline int weight_w(const Multigraph& g, const ParkingFunction& f) {
    detail::check_labeling_shape(g, f);
    int sum = 0;
    for (int x : f) sum += x;
    return g.total_edges() - g.vertex_count() - sum;
}

}  // namespace gparking

#endif  // GPARKING_PARKING_HPP

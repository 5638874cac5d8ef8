#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "gparking/parking.hpp"
#include "support/oracles.hpp"

using namespace gparking;
using testing::gstar;

namespace {

// All labelings with f(0) = -1 and -1 <= f(v) <= loopless_degree(v), the
// widest range the membership tests need to agree on.
std::vector<ParkingFunction> candidate_labelings(const Multigraph& g) {
    const int n = g.non_root_count();
    std::vector<ParkingFunction> out;
    ParkingFunction f(g.vertex_count(), -1);
    while (true) {
        out.push_back(f);
        int v = n;
        while (v >= 1 && f[v] == g.loopless_degree(v)) f[v--] = -1;
        if (v < 1) break;
        ++f[v];
    }
    return out;
}

}  // namespace

TEST_CASE("is_parking on the worked example", "[parking]") {
    Multigraph g = gstar();
    CHECK(is_parking(g, {-1, 0, 0, 2}));
    CHECK_FALSE(is_parking(g, {-1, 0, 2, 0}));
    CHECK(is_parking(g, {-1, 0, 0, 0}));
    CHECK_FALSE(is_parking(g, {0, 0, 0, 0}));
}

TEST_CASE("check_parking distinguishes failure reasons", "[parking]") {
    Multigraph g = gstar();
    auto bad_root = check_parking_by_subsets(g, {0, 0, 0, 0});
    CHECK(bad_root.failure == ParkingFailure::bad_root_value);

    auto bad_subset = check_parking_by_subsets(g, {-1, 0, 2, 0});
    CHECK(bad_subset.failure == ParkingFailure::subset_violation);
    CHECK_FALSE(bad_subset.witness.empty());
    // the witness is a genuine violation
    bool any = false;
    for (int v : bad_subset.witness) {
        int f_v = std::vector<int>{-1, 0, 2, 0}[v];
        if (f_v >= 0 && f_v < out_degree(g, bad_subset.witness, v)) any = true;
    }
    CHECK_FALSE(any);

    CHECK(check_parking_by_subsets(g, {-1, 0, 0, 2}).ok());
}

TEST_CASE("enumerate_parking reproduces the eight functions of the example", "[parking]") {
    std::vector<ParkingFunction> expected = {
        {-1, 0, 0, 0}, {-1, 0, 0, 1}, {-1, 0, 0, 2}, {-1, 0, 1, 0},
        {-1, 0, 1, 1}, {-1, 1, 0, 0}, {-1, 1, 1, 0}, {-1, 2, 0, 0},
    };
    CHECK(enumerate_parking(gstar()) == expected);
}

TEST_CASE("enumerate_parking degenerate cases", "[parking]") {
    CHECK(enumerate_parking(build_multigraph(1, {})) ==
          std::vector<ParkingFunction>{{-1}});
    CHECK(enumerate_parking(build_multigraph(2, {{0, 1}})) ==
          std::vector<ParkingFunction>{{-1, 0}});
    CHECK_THROWS_AS(enumerate_parking(Multigraph(3)), std::invalid_argument);
}

TEST_CASE("enumeration is independent of the thread count", "[parking]") {
    Multigraph g = complete_graph(5);
    auto serial = enumerate_parking(g, 1);
    CHECK(enumerate_parking(g, 4) == serial);
    CHECK(serial.size() == 125);  // Cayley: 5^3 spanning trees of K_5
}

TEST_CASE("fast path and subset test agree on every small labeling", "[parking]") {
    for (int nv : {2, 3, 4}) {
        for (const Multigraph& g : testing::connected_multigraphs(nv, nv == 4 ? 6 : 5)) {
            for (const auto& f : candidate_labelings(g))
                CHECK(is_parking(g, f) == is_parking_by_subsets(g, f));
        }
    }
}

TEST_CASE("parking function count equals the spanning tree count", "[parking]") {
    for (int nv : {1, 2, 3, 4}) {
        for (const Multigraph& g : testing::connected_multigraphs(nv, 5)) {
            CHECK(static_cast<long long>(enumerate_parking(g).size()) ==
                  count_spanning_trees(g));
        }
    }
}

TEST_CASE("decrementing a positive value keeps the parking property", "[parking]") {
    for (int nv : {2, 3, 4}) {
        for (const Multigraph& g : testing::connected_multigraphs(nv, 5)) {
            for (const auto& f : enumerate_parking(g)) {
                for (int v = 1; v < g.vertex_count(); ++v) {
                    if (f[v] == 0) continue;
                    ParkingFunction lower = f;
                    lower[v] -= 1;
                    CHECK(is_parking(g, lower));
                }
            }
        }
    }
}

TEST_CASE("weights are nonnegative and the minimum is the loop count", "[parking]") {
    // loops shift every weight up by one, so min w(f) = #loops; in
    // particular max_f sum(f) = |E| - |V| exactly when G is loopless
    for (int nv : {2, 3, 4}) {
        for (const Multigraph& g : testing::connected_multigraphs(nv, 5)) {
            int loops = 0;
            for (int v = 0; v < g.vertex_count(); ++v) loops += g.multiplicity(v, v);
            int min_w = g.total_edges();
            for (const auto& f : enumerate_parking(g)) {
                int w = weight_w(g, f);
                CHECK(w >= 0);
                min_w = std::min(min_w, w);
            }
            CHECK(min_w == loops);
        }
    }
}

TEST_CASE("weight_w matches the worked example", "[parking]") {
    Multigraph g = gstar();
    CHECK(weight_w(g, {-1, 0, 0, 0}) == 2);
    CHECK(weight_w(g, {-1, 2, 0, 0}) == 0);
    CHECK(weight_w(build_multigraph(2, {{0, 1}}), {-1, 0}) == 0);
}

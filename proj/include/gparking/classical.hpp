#ifndef GPARKING_CLASSICAL_HPP
#define GPARKING_CLASSICAL_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gparking/bivariate_polynomial.hpp"
#include "gparking/multigraph.hpp"
#include "gparking/tree_bijection.hpp"
#include "gparking/tutte.hpp"

namespace gparking {

// Classical parking functions use 0-based values: (a_1,...,a_n) parks iff
// its nondecreasing rearrangement (b_1,...,b_n) has b_i <= i-1. They are
// exactly the K_{n+1}-parking functions with the root entry stripped.

inline bool is_classical_parking(const std::vector<int>& alpha) {
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("is_classical_parking: negative entry");
    std::vector<int> sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] > static_cast<int>(i)) return false;
    return true;
}

// Prepend the root value -1, giving a K_{n+1}-parking function.
inline ParkingFunction embed_classical(const std::vector<int>& alpha) {
    if (!is_classical_parking(alpha))
        throw std::invalid_argument("embed_classical: not a classical parking function");
    ParkingFunction f;
    f.reserve(alpha.size() + 1);
    f.push_back(-1);
    f.insert(f.end(), alpha.begin(), alpha.end());
    return f;
}

// Positions (1-based) of the alpha-critical maxima: a_i = j qualifies when
// exactly n-1-j terms exceed j and every such term appears before i.
inline std::vector<int> critical_maxima(const std::vector<int>& alpha) {
    if (!is_classical_parking(alpha))
        throw std::invalid_argument("critical_maxima: not a classical parking function");
    const int n = static_cast<int>(alpha.size());
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        const int j = alpha[i - 1];
        int larger = 0, last_larger_pos = 0;
        for (int k = 1; k <= n; ++k) {
            if (alpha[k - 1] > j) {
                ++larger;
                last_larger_pos = std::max(last_larger_pos, k);
            }
        }
        if (larger == n - 1 - j && last_larger_pos < i) out.push_back(i);
    }
    return out;
}

inline int cm(const std::vector<int>& alpha) {
    return static_cast<int>(critical_maxima(alpha).size());
}

// All classical parking functions of length n, in lexicographic order.
// Values are bounded by n-1, so the box [0,n-1]^n covers everything.
inline std::vector<std::vector<int>> enumerate_classical_parking(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_classical_parking: n must be nonnegative");
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> alpha(n, 0);
    while (true) {
        if (is_classical_parking(alpha)) out.push_back(alpha);
        int v = n - 1;
        while (v >= 0 && alpha[v] == n - 1) alpha[v--] = 0;
        if (v < 0) break;
        ++alpha[v];
    }
    return out;
}

// T_{K_{n+1}}(x,y) = sum over classical parking functions alpha of length n
// of x^{cm(alpha)} y^{C(n,2) - sum(alpha)}.
inline BivariatePolynomial tutte_complete(int n) {
    if (n < 1) throw std::invalid_argument("tutte_complete: n must be at least 1");
    const int choose2 = n * (n - 1) / 2;
    BivariatePolynomial out;
    for (const auto& alpha : enumerate_classical_parking(n)) {
        int sum = 0;
        for (int a : alpha) sum += a;
        out.add_term(cm(alpha), choose2 - sum, 1);
    }
    return out;
}

}  // namespace gparking

#endif  // GPARKING_CLASSICAL_HPP

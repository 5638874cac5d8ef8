#ifndef GPARKING_BIVARIATE_POLYNOMIAL_HPP
#define GPARKING_BIVARIATE_POLYNOMIAL_HPP

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace gparking {

// Polynomial in x and y with exact integer coefficients. Terms are kept in
// the printing order (x exponent descending, then y ascending) and zero
// coefficients are never stored.
class BivariatePolynomial {
public:
    struct TermOrder {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        }
    };
    using TermMap = std::map<std::pair<int, int>, long long, TermOrder>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(long long c) {
        BivariatePolynomial p;
        p.add_term(0, 0, c);
        return p;
    }

    static BivariatePolynomial monomial(int x_exp, int y_exp, long long c = 1) {
        BivariatePolynomial p;
        p.add_term(x_exp, y_exp, c);
        return p;
    }

    void add_term(int x_exp, int y_exp, long long coeff) {
        if (x_exp < 0 || y_exp < 0)
            throw std::invalid_argument("BivariatePolynomial: negative exponent");
        if (coeff == 0) return;
        auto key = std::make_pair(x_exp, y_exp);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else if ((it->second += coeff) == 0) {
            terms_.erase(it);
        }
    }

    long long coefficient(int x_exp, int y_exp) const {
        auto it = terms_.find({x_exp, y_exp});
        return it == terms_.end() ? 0 : it->second;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int x_degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first);
        return d;
    }
    int y_degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.second);
        return d;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& other) {
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
        return *this;
    }

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    long long evaluate(long long x, long long y) const {
        auto ipow = [](long long base, int exp) {
            long long r = 1;
            for (int k = 0; k < exp; ++k) r *= base;
            return r;
        };
        long long total = 0;
        for (const auto& [key, c] : terms_) total += c * ipow(x, key.first) * ipow(y, key.second);
        return total;
    }

    // Canonical text form, e.g. "x^3+2*x^2+x+2*x*y+y+y^2"; the zero
    // polynomial prints as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            const long long mag = std::abs(c);
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? "-" : "+";
            }
            first = false;
            std::string factors;
            auto append_factor = [&](const std::string& s) {
                if (!factors.empty()) factors += "*";
                factors += s;
            };
            if (mag != 1 || (key.first == 0 && key.second == 0))
                append_factor(std::to_string(mag));
            if (key.first > 0) append_factor(key.first == 1 ? "x" : "x^" + std::to_string(key.first));
            if (key.second > 0) append_factor(key.second == 1 ? "y" : "y^" + std::to_string(key.second));
            out += factors;
        }
        return out;
    }

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    TermMap terms_;
};

inline long long poly_eval(const BivariatePolynomial& p, long long x, long long y) {
    return p.evaluate(x, y);
}

}  // namespace gparking

#endif  // GPARKING_BIVARIATE_POLYNOMIAL_HPP

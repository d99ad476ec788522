#pragma once

// Truncated formal power series with exact arbitrary-precision integer
// coefficients. The truncation order is a per-series attribute; arithmetic
// on mixed orders truncates to the minimum order at which the result is
// still exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctrees {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    }

    PowerSeries(int order, std::vector<Int> coeffs) : PowerSeries(order) {
        if (coeffs.size() > coeffs_.size())
            throw std::invalid_argument("PowerSeries: more coefficients than order+1");
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
    }

    static PowerSeries zero(int order) { return PowerSeries(order); }

    static PowerSeries one(int order) {
        PowerSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static PowerSeries x(int order) {
        PowerSeries s(order);
        if (order >= 1) s.coeffs_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    Int& operator[](int n) { return coeffs_.at(static_cast<size_t>(n)); }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    PowerSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        PowerSeries s(new_order);
        for (int i = 0; i <= new_order; ++i) s.coeffs_[i] = coeffs_[i];
        return s;
    }

    // Multiply by x.  The coefficient of x^{order+1} is exact, so the order grows.
    PowerSeries shifted_up() const {
        PowerSeries s(order() + 1);
        for (int i = 0; i <= order(); ++i) s.coeffs_[i + 1] = coeffs_[i];
        return s;
    }

    // Divide by x; requires zero constant term.
    PowerSeries shifted_down() const {
        if (coeffs_[0] != 0)
            throw std::invalid_argument("shifted_down: nonzero constant term");
        if (order() == 0) return PowerSeries(0);
        PowerSeries s(order() - 1);
        for (int i = 1; i <= order(); ++i) s.coeffs_[i - 1] = coeffs_[i];
        return s;
    }

    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i <= order(); ++i) {
            if (i) os << ", ";
            os << coeffs_[i];
        }
        return os.str();
    }

private:
    std::vector<Int> coeffs_;  // coefficient of x^n at index n
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
}

// Cauchy product, truncated to the smaller order.
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

inline PowerSeries operator*(const Int& c, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = c * a[i];
    return r;
}

// Coefficientwise exact division by a scalar; any remainder is an internal error.
inline PowerSeries div_exact(const PowerSeries& a, const Int& d) {
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] % d != 0) {
            std::ostringstream os;
            os << "div_exact: coefficient of x^" << i << " (" << a[i]
               << ") not divisible by " << d;
            throw std::logic_error(os.str());
        }
        r[i] = a[i] / d;
    }
    return r;
}

// a(x) -> a(x^k).  Exact to order a.order*k.
inline PowerSeries substitute_power(const PowerSeries& a, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
    PowerSeries r(a.order() * k);
    for (int i = 0; i <= a.order(); ++i) r[i * k] = a[i];
    return r;
}

// 1/(1-g) for g with zero constant term.
inline PowerSeries geometric_inverse(const PowerSeries& g) {
    if (g[0] != 0) {
        std::ostringstream os;
        os << "geometric_inverse: constant coefficient is " << g[0] << ", expected 0";
        throw std::invalid_argument(os.str());
    }
    int n = g.order();
    PowerSeries h(n);
    h[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int s = 0;
        for (int k = 1; k <= m; ++k) s += g[k] * h[m - k];
        h[m] = s;
    }
    return h;
}

// Euler transform via the product formula prod_n (1-x^n)^{-a(n)}.
// The input counts atoms of each size (zero constant term); the output counts
// multisets, with constant term 1.
inline PowerSeries euler_transform(const PowerSeries& a) {
    if (a[0] != 0) {
        std::ostringstream os;
        os << "euler_transform: constant coefficient is " << a[0] << ", expected 0";
        throw std::invalid_argument(os.str());
    }
    int order = a.order();
    PowerSeries b = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        if (a[n] == 0) continue;
        // (1-x^n)^{-a} = sum_j binomial(a+j-1, j) x^{nj}
        PowerSeries factor(order);
        Int term = 1;
        factor[0] = 1;
        for (int j = 1; n * j <= order; ++j) {
            term = term * (a[n] + j - 1) / j;  // exact: partial binomial
            factor[n * j] = term;
        }
        b = b * factor;
    }
    return b;
}

// Euler transform via exp(sum_k a(x^k)/k), with exact rational intermediates.
// Must agree with the product form; a non-integer result is an internal error.
inline PowerSeries euler_transform_exp(const PowerSeries& a) {
    if (a[0] != 0)
        throw std::invalid_argument("euler_transform_exp: nonzero constant term");
    int order = a.order();
    std::vector<Rat> log_sum(static_cast<size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) {
        for (int i = 1; i * k <= order; ++i) {
            if (a[i] != 0) log_sum[i * k] += Rat(a[i], k);
        }
    }
    // exp via n*B(n) = sum_m m*L(m)*B(n-m)
    std::vector<Rat> b(static_cast<size_t>(order) + 1);
    b[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rat s = 0;
        for (int m = 1; m <= n; ++m) s += m * log_sum[m] * b[n - m];
        b[n] = s / n;
    }
    PowerSeries r(order);
    for (int n = 0; n <= order; ++n) {
        if (denominator(b[n]) != 1) {
            std::ostringstream os;
            os << "euler_transform_exp: non-integer coefficient at x^" << n;
            throw std::logic_error(os.str());
        }
        r[n] = numerator(b[n]);
    }
    return r;
}

}  // namespace ctrees

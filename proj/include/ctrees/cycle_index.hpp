#pragma once

// Cycle-index polynomials in indeterminates t_1, t_2, ... with exact rational
// coefficients, for the three group families used here: the palindromic flip
// acting on a cycle hung off a fixed entry node, the cyclic groups, and the
// dihedral groups.  Plethystic substitution t_i -> f(x^i) turns them into
// counting series.

#include <ctrees/power_series.hpp>

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace ctrees {

// (index, exponent) pairs sorted by index, exponents > 0; the empty monomial
// is the constant 1.
using Monomial = std::vector<std::pair<int, int>>;

class CycleIndexPoly {
public:
    CycleIndexPoly() = default;

    static CycleIndexPoly constant(const Rat& c) {
        CycleIndexPoly z;
        z.add_term({}, c);
        return z;
    }

    static CycleIndexPoly variable(int i, int exponent = 1) {
        CycleIndexPoly z;
        z.add_term({{i, exponent}}, 1);
        return z;
    }

    void add_term(Monomial m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool operator==(const CycleIndexPoly& o) const { return terms_ == o.terms_; }

    CycleIndexPoly operator+(const CycleIndexPoly& o) const {
        CycleIndexPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    CycleIndexPoly operator*(const Rat& c) const {
        CycleIndexPoly r;
        if (c == 0) return r;
        for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
        return r;
    }

    // Evaluate with every t_i replaced by value(i).
    Rat evaluate(const std::function<Rat(int)>& value) const {
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Rat prod = c;
            for (const auto& [i, e] : m)
                for (int k = 0; k < e; ++k) prod *= value(i);
            total += prod;
        }
        return total;
    }

private:
    std::map<Monomial, Rat> terms_;
};

namespace detail {

inline long long totient(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline PowerSeries series_pow(const PowerSeries& base, int e, int order) {
    PowerSeries result = PowerSeries::one(order);
    PowerSeries b = base.truncated(order);
    while (e > 0) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

}  // namespace detail

// Flip symmetry of a cycle of length c attached to a fixed entry node:
// the entry stays put and nodes i, c+2-i swap.
inline CycleIndexPoly z_s2(int c) {
    if (c < 0) throw std::invalid_argument("z_s2: c must be >= 0");
    CycleIndexPoly z;
    if (c == 0) {
        z.add_term({}, 1);
    } else if (c % 2 == 1) {
        // t_1(t_1^{c-1} + t_2^{(c-1)/2})/2
        z.add_term({{1, c}}, Rat(1, 2));
        if (c == 1) {
            z.add_term({{1, 1}}, Rat(1, 2));
        } else {
            z.add_term({{1, 1}, {2, (c - 1) / 2}}, Rat(1, 2));
        }
    } else {
        // t_1^2(t_1^{c-2} + t_2^{(c-2)/2})/2
        z.add_term({{1, c}}, Rat(1, 2));
        if (c == 2) {
            z.add_term({{1, 2}}, Rat(1, 2));
        } else {
            z.add_term({{1, 2}, {2, (c - 2) / 2}}, Rat(1, 2));
        }
    }
    return z;
}

// Z(C_n) = (1/n) sum_{d|n} phi(d) t_d^{n/d}
inline CycleIndexPoly z_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("z_cyclic: n must be >= 1");
    CycleIndexPoly z;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) z.add_term({{d, n / d}}, Rat(detail::totient(d), n));
    }
    return z;
}

// Z(D_n): half the cyclic index plus the reflection terms.
inline CycleIndexPoly z_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("z_dihedral: n must be >= 1");
    CycleIndexPoly z = z_cyclic(n) * Rat(1, 2);
    if (n % 2 == 1) {
        if (n == 1) {
            z.add_term({{1, 1}}, Rat(1, 2));
        } else {
            z.add_term({{1, 1}, {2, n / 2}}, Rat(1, 2));
        }
    } else {
        if (n == 2) {
            z.add_term({{1, 2}}, Rat(1, 4));
        } else {
            z.add_term({{1, 2}, {2, n / 2 - 1}}, Rat(1, 4));
        }
        z.add_term({{2, n / 2}}, Rat(1, 4));
    }
    return z;
}

// Plethystic substitution with rational result.  f must have zero constant
// term and order >= the requested order so every monomial is exact.
inline std::vector<Rat> substitute_rational(const CycleIndexPoly& z,
                                            const PowerSeries& f, int order) {
    if (f[0] != 0)
        throw std::invalid_argument("substitute: f must have zero constant term");
    if (f.order() < order)
        throw std::invalid_argument("substitute: f.order below requested order");
    std::vector<Rat> acc(static_cast<size_t>(order) + 1);
    std::map<int, PowerSeries> dilated;  // cache of f(x^i)
    for (const auto& [m, c] : z.terms()) {
        PowerSeries prod = PowerSeries::one(order);
        for (const auto& [i, e] : m) {
            auto it = dilated.find(i);
            if (it == dilated.end())
                it = dilated.emplace(i, substitute_power(f, i).truncated(std::min(order, f.order() * i))).first;
            prod = prod * detail::series_pow(it->second, e, order);
        }
        for (int n = 0; n <= std::min(order, prod.order()); ++n)
            if (prod[n] != 0) acc[n] += c * prod[n];
    }
    return acc;
}

// Substitution in a group-averaged context: the result must be an integer
// series (it is a count); anything else is a hard error.
inline PowerSeries substitute(const CycleIndexPoly& z, const PowerSeries& f, int order) {
    std::vector<Rat> acc = substitute_rational(z, f, order);
    PowerSeries r(order);
    for (int n = 0; n <= order; ++n) {
        if (denominator(acc[n]) != 1) {
            std::ostringstream os;
            os << "substitute: non-integer coefficient at x^" << n;
            throw std::logic_error(os.str());
        }
        r[n] = numerator(acc[n]);
    }
    return r;
}

}  // namespace ctrees

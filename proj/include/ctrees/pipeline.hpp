#pragma once

// Derivation pipeline for the C-tree counting series: bootstrap the planted
// series P and forest series F to a fixed point, build the skeleton-rooted
// series from dihedral cycle indices, and synthesize the unrooted series
// through the generalized Otter identity
//   C + C'^2 = C-dot + E2(C').

#include <ctrees/cycle_index.hpp>
#include <ctrees/power_series.hpp>

#include <utility>

namespace ctrees {

struct VariantFlag {
    bool allow_two_cycles = true;  // false = exclude cycles of length 2 (double edges)
};

inline constexpr VariantFlag kAllowTwoCycles{true};
inline constexpr VariantFlag kNoTwoCycles{false};

// C'(x) = P(x)/x - 1: coefficient of x^n is p(n+1).
inline PowerSeries decapitated(const PowerSeries& planted) {
    if (planted[0] != 0)
        throw std::invalid_argument("decapitated: planted series must have p(0)=0");
    if (planted.order() >= 1 && planted[1] != 1)
        throw std::invalid_argument("decapitated: planted series must have p(1)=1");
    PowerSeries r = planted.shifted_down();
    r[0] = 0;  // drop the 1 that p(1) contributes
    return r;
}

// Forest series F = x * EulerTransform(P/x - 1).
inline PowerSeries forest_from_planted(const PowerSeries& planted) {
    return euler_transform(decapitated(planted)).shifted_up();
}

// Closed-form planted series given the forest series:
//   2P/x = 1 + F(1+F)/(1-F(x^2)) + 1/(1-F)            (all cycle lengths)
//   2P/x = 1 - 2F^2 + F(1+F)/(1-F(x^2)) + 1/(1-F)     (no 2-cycles)
inline PowerSeries planted_from_forest(const PowerSeries& forest, VariantFlag variant,
                                       int order) {
    PowerSeries f = forest.truncated(order);
    PowerSeries f_sq = substitute_power(forest, 2).truncated(order);
    PowerSeries one = PowerSeries::one(order);
    PowerSeries twice =
        one + f * (one + f) * geometric_inverse(f_sq) + geometric_inverse(f);
    if (!variant.allow_two_cycles) twice = twice - Int(2) * (f * f);
    return div_exact(twice.shifted_up(), 2).truncated(order);
}

// Iterate F -> P -> F starting from P = x until the coefficients stop moving.
// Each pass finalizes at least one more order, so N+2 passes always suffice.
inline std::pair<PowerSeries, PowerSeries> bootstrap_planted(int order,
                                                             VariantFlag variant) {
    if (order < 1) throw std::invalid_argument("bootstrap_planted: order must be >= 1");
    PowerSeries planted = PowerSeries::x(order);
    PowerSeries forest = PowerSeries::x(order);
    for (int iter = 0; iter <= order + 2; ++iter) {
        PowerSeries next_forest =
            forest_from_planted(planted).truncated(order);
        PowerSeries next_planted = planted_from_forest(next_forest, variant, order);
        if (next_planted == planted && next_forest == forest) break;
        planted = std::move(next_planted);
        forest = std::move(next_forest);
    }
    return {planted, forest};
}

// Sum of dihedral cycle indices substituted with F, over cycle lengths
// c = 1..order (c = 2 dropped in the no-2-cycle variant).  Each term has
// valuation >= c, so the truncation is exact.
inline PowerSeries skeleton_rooted(const PowerSeries& forest, VariantFlag variant,
                                   int order) {
    PowerSeries total = PowerSeries::zero(order);
    for (int c = 1; c <= order; ++c) {
        if (c == 2 && !variant.allow_two_cycles) continue;
        total = total + substitute(z_dihedral(c), forest.truncated(order), order);
    }
    return total;
}

struct PairSeries {
    PowerSeries unordered;  // E2(g) = (g(x)^2 + g(x^2))/2 : unoriented marked bridge
    PowerSeries ordered;    // g(x)^2 : oriented marked bridge
};

inline PairSeries pair_series(const PowerSeries& g) {
    if (g[0] != 0)
        throw std::invalid_argument("pair_series: g must have zero constant term");
    int order = g.order();
    PowerSeries square = g * g;
    PowerSeries dilated = substitute_power(g, 2).truncated(order);
    return {div_exact(square + dilated, 2), square};
}

// C = C-dot + E2(C') - C'^2 for n >= 1; c(0) = 1 by convention (empty graph).
inline PowerSeries otter_synthesis(const PowerSeries& skeleton_rooted_series,
                                   const PowerSeries& node_rooted_series) {
    PairSeries pairs = pair_series(node_rooted_series);
    PowerSeries c = skeleton_rooted_series + pairs.unordered - pairs.ordered;
    c[0] = 1;
    return c;
}

struct SeriesBundle {
    VariantFlag variant;
    int order;
    PowerSeries planted;          // P
    PowerSeries forest;           // F
    PowerSeries node_rooted;      // C' (decapitated planted)
    PowerSeries skeleton_rooted;  // C-dot
    PowerSeries ctree;            // C
};

inline SeriesBundle make_bundle(int order, VariantFlag variant) {
    auto [planted_full, forest_full] = bootstrap_planted(order + 1, variant);
    PowerSeries node_rooted = decapitated(planted_full).truncated(order);
    PowerSeries cdot = skeleton_rooted(forest_full.truncated(order), variant, order);
    PowerSeries ctree = otter_synthesis(cdot, node_rooted);
    return SeriesBundle{variant,
                        order,
                        planted_full.truncated(order),
                        forest_full.truncated(order),
                        std::move(node_rooted),
                        std::move(cdot),
                        std::move(ctree)};
}

// The same pipeline restricted to cycles of length 1 only.  P = x(1 + F),
// the skeleton-rooted sum is the lone c = 1 term, and the Otter synthesis
// must reproduce the classical tree numbers T(v).
inline PowerSeries tree_series_check(int order) {
    if (order < 1) throw std::invalid_argument("tree_series_check: order must be >= 1");
    int n = order + 1;
    PowerSeries planted = PowerSeries::x(n);
    for (int iter = 0; iter <= n + 2; ++iter) {
        PowerSeries forest = forest_from_planted(planted).truncated(n);
        PowerSeries next = (PowerSeries::one(n) + forest).shifted_up().truncated(n);
        if (next == planted) break;
        planted = std::move(next);
    }
    PowerSeries node_rooted = decapitated(planted).truncated(order);
    PowerSeries forest = forest_from_planted(planted).truncated(order);
    PowerSeries cdot = substitute(z_dihedral(1), forest, order);
    return otter_synthesis(cdot, node_rooted);
}

}  // namespace ctrees

#include <ctrees/pipeline.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace ctrees;

namespace {

std::vector<long long> prefix(const PowerSeries& s, int from, int to) {
    std::vector<long long> v;
    for (int n = from; n <= to; ++n) v.push_back(s[n].convert_to<long long>());
    return v;
}

// Term-by-term alternate to the closed-form planted series: the sum of
// substituted flip indices over cycle lengths, used only as a cross check.
PowerSeries planted_from_cycle_sum(const PowerSeries& forest, VariantFlag variant,
                                   int order) {
    PowerSeries inner = PowerSeries::zero(order - 1);
    PowerSeries f = forest.truncated(order - 1);
    for (int c = 0; c <= order - 1; ++c) {
        if (c == 2 && !variant.allow_two_cycles) continue;
        inner = inner + substitute(z_s2(c), f, order - 1);
    }
    return inner.shifted_up();
}

}  // namespace

TEST_CASE("bootstrap reproduces the planted and forest lists") {
    auto [p, f] = bootstrap_planted(6, kAllowTwoCycles);
    CHECK(p[0] == 0);
    CHECK(prefix(p, 1, 6) == std::vector<long long>{1, 1, 2, 6, 19, 67});
    CHECK(f[0] == 0);
    CHECK(prefix(f, 1, 6) == std::vector<long long>{1, 1, 3, 9, 31, 110});
}

TEST_CASE("bootstrap no-2-cycle variant") {
    auto [p, f] = bootstrap_planted(6, kNoTwoCycles);
    CHECK(prefix(p, 1, 6) == std::vector<long long>{1, 1, 1, 3, 8, 24});
    CHECK(prefix(f, 1, 6) == std::vector<long long>{1, 1, 2, 5, 14, 41});
}

TEST_CASE("bootstrap at order 1") {
    auto [p, f] = bootstrap_planted(1, kAllowTwoCycles);
    CHECK(p == PowerSeries::x(1));
    CHECK(f == PowerSeries::x(1));
    auto [p2, f2] = bootstrap_planted(1, kNoTwoCycles);
    CHECK(p2 == PowerSeries::x(1));
    CHECK(f2 == PowerSeries::x(1));
}

TEST_CASE("bootstrap fixed point is stable") {
    for (VariantFlag variant : {kAllowTwoCycles, kNoTwoCycles}) {
        auto [p, f] = bootstrap_planted(12, variant);
        PowerSeries f_again = forest_from_planted(p).truncated(12);
        PowerSeries p_again = planted_from_forest(f_again, variant, 12);
        CHECK(p_again == p);
        CHECK(f_again == f);
    }
}

TEST_CASE("each bootstrap pass finalizes at least one more order") {
    const int order = 10;
    auto [p_final, f_final] = bootstrap_planted(order, kAllowTwoCycles);
    PowerSeries p = PowerSeries::x(order);
    for (int k = 1; k <= order; ++k) {
        PowerSeries f = forest_from_planted(p).truncated(order);
        p = planted_from_forest(f, kAllowTwoCycles, order);
        int settled = std::min(order, k + 1);
        for (int n = 0; n <= settled; ++n) CHECK(p[n] == p_final[n]);
    }
}

TEST_CASE("decapitated shifts out the root") {
    auto [p, f] = bootstrap_planted(5, kAllowTwoCycles);
    PowerSeries cp = decapitated(p);
    CHECK(cp[0] == 0);
    CHECK(prefix(cp, 1, 4) == std::vector<long long>{1, 2, 6, 19});

    CHECK(decapitated(PowerSeries::x(1)) == PowerSeries::zero(0));

    auto [pv, fv] = bootstrap_planted(5, kNoTwoCycles);
    CHECK(prefix(decapitated(pv), 1, 4) == std::vector<long long>{1, 1, 3, 8});
}

TEST_CASE("closed-form planted agrees with the cycle-length sum to order 30") {
    for (VariantFlag variant : {kAllowTwoCycles, kNoTwoCycles}) {
        auto [p, f] = bootstrap_planted(30, variant);
        CHECK(planted_from_cycle_sum(f, variant, 30) == p);
    }
}

TEST_CASE("skeleton-rooted series") {
    auto [p, f] = bootstrap_planted(6, kAllowTwoCycles);
    PowerSeries cdot = skeleton_rooted(f, kAllowTwoCycles, 6);
    CHECK(prefix(cdot, 1, 6) == std::vector<long long>{1, 2, 5, 15, 49, 176});

    auto [pv, fv] = bootstrap_planted(6, kNoTwoCycles);
    PowerSeries cdotv = skeleton_rooted(fv, kNoTwoCycles, 6);
    CHECK(prefix(cdotv, 1, 6) == std::vector<long long>{1, 1, 3, 7, 19, 55});

    auto [p1, f1] = bootstrap_planted(1, kAllowTwoCycles);
    CHECK(skeleton_rooted(f1, kAllowTwoCycles, 1) == PowerSeries::x(1));
}

TEST_CASE("pair series") {
    auto [p, f] = bootstrap_planted(9, kAllowTwoCycles);
    PairSeries pairs = pair_series(decapitated(p));
    CHECK(prefix(pairs.unordered, 2, 8) ==
          std::vector<long long>{1, 2, 9, 31, 126, 492, 2014});
    CHECK(prefix(pairs.ordered, 2, 8) ==
          std::vector<long long>{1, 4, 16, 62, 246, 984, 4009});

    PairSeries single = pair_series(PowerSeries::x(2));
    CHECK(single.unordered == single.ordered);
    CHECK(single.unordered[2] == 1);
}

TEST_CASE("otter synthesis yields the C-tree series") {
    SeriesBundle bundle = make_bundle(20, kAllowTwoCycles);
    CHECK(bundle.ctree[0] == 1);
    CHECK(prefix(bundle.ctree, 1, 8) ==
          std::vector<long long>{1, 2, 3, 8, 18, 56, 165, 563});

    SeriesBundle variant = make_bundle(20, kNoTwoCycles);
    CHECK(prefix(variant.ctree, 1, 8) ==
          std::vector<long long>{1, 1, 2, 4, 8, 20, 48, 133});
}

TEST_CASE("otter identity holds coefficientwise") {
    for (VariantFlag v : {kAllowTwoCycles, kNoTwoCycles}) {
        SeriesBundle b = make_bundle(25, v);
        PairSeries pairs = pair_series(b.node_rooted);
        for (int n = 1; n <= 25; ++n) {
            CHECK(b.ctree[n] + pairs.ordered[n] ==
                  b.skeleton_rooted[n] + pairs.unordered[n]);
        }
    }
}

TEST_CASE("small hand counts") {
    SeriesBundle b = make_bundle(6, kAllowTwoCycles);
    CHECK(b.ctree[1] == 1);
    CHECK(b.ctree[2] == 2);
    CHECK(b.ctree[3] == 3);
}

TEST_CASE("variant dominance") {
    SeriesBundle allow = make_bundle(40, kAllowTwoCycles);
    SeriesBundle forbid = make_bundle(40, kNoTwoCycles);
    for (int n = 0; n <= 40; ++n) {
        CHECK(forbid.planted[n] <= allow.planted[n]);
        CHECK(forbid.forest[n] <= allow.forest[n]);
        CHECK(forbid.ctree[n] <= allow.ctree[n]);
        CHECK(forbid.skeleton_rooted[n] <= allow.skeleton_rooted[n]);
    }
}

TEST_CASE("cycle-length-1 pipeline reproduces the tree numbers") {
    PowerSeries t = tree_series_check(11);
    CHECK(prefix(t, 1, 11) ==
          std::vector<long long>{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235});
    CHECK(tree_series_check(1)[1] == 1);
    CHECK(tree_series_check(4)[4] == 2);
}

TEST_CASE("skeleton-rooted conflict value at n=7") {
    SeriesBundle b = make_bundle(8, kAllowTwoCycles);
    CHECK(b.skeleton_rooted[7] == 657);
}

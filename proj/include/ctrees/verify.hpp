#pragma once

// Series-versus-oracle comparison: for each n within the oracle caps, the
// brute-force counts must equal the pipeline coefficients for every counting
// scheme.  The report builder takes the bundle as an argument so tests can
// feed it corrupted coefficients and watch rows fail.

#include <ctrees/oracle.hpp>
#include <ctrees/pipeline.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace ctrees {

struct VerifyRow {
    std::string scheme;
    int n;
    Int series_value;
    long long oracle_value;
    bool pass;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass = true;

    void add(const std::string& scheme, int n, const Int& series_value,
             long long oracle_value) {
        bool ok = series_value == oracle_value;
        rows.push_back({scheme, n, series_value, oracle_value, ok});
        if (!ok) all_pass = false;
    }
};

inline VerifyReport verify_against_bundle(const SeriesBundle& bundle, int n_max) {
    bool allow = bundle.variant.allow_two_cycles;
    detail::check_cap(n_max, allow);
    if (bundle.order < n_max + 1)
        throw std::invalid_argument("verify: bundle order too small");

    PairSeries pairs = pair_series(bundle.node_rooted);
    VerifyReport report;
    for (int n = 1; n <= n_max; ++n) {
        report.add("unrooted", n, bundle.ctree[n],
                   static_cast<long long>(enumerate_ctrees(n, allow).size()));
        report.add("planted", n, bundle.planted[n], count_planted(n, allow));
        report.add("node-rooted", n, bundle.node_rooted[n], count_node_rooted(n, allow));
        report.add("skeleton-rooted", n, bundle.skeleton_rooted[n],
                   count_skeleton_rooted(n, allow));
        report.add("bridge-unoriented", n, pairs.unordered[n],
                   count_bridge_rooted(n, allow, false));
        report.add("bridge-oriented", n, pairs.ordered[n],
                   count_bridge_rooted(n, allow, true));
    }
    return report;
}

inline VerifyReport verify(int n_max, VariantFlag variant) {
    detail::check_cap(n_max, variant.allow_two_cycles);
    return verify_against_bundle(make_bundle(n_max + 1, variant), n_max);
}

inline std::string render_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "scheme              n  series          oracle          status\n";
    for (const VerifyRow& r : report.rows) {
        os << r.scheme;
        for (size_t i = r.scheme.size(); i < 18; ++i) os << ' ';
        std::string n = std::to_string(r.n);
        os << "  " << n << "  ";
        std::string sv = r.series_value.str();
        os << sv;
        for (size_t i = sv.size(); i < 14; ++i) os << ' ';
        std::string ov = std::to_string(r.oracle_value);
        os << "  " << ov;
        for (size_t i = ov.size(); i < 14; ++i) os << ' ';
        os << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    os << (report.all_pass ? "all rows PASS\n" : "verification FAILED\n");
    return os.str();
}

}  // namespace ctrees

// Command-line front end: compute any series of the bundle, run the
// oracle-versus-series verification, or export enumerated C-trees as DOT.
//
// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage error,
// 3 I/O error.

#include <ctrees/oracle.hpp>
#include <ctrees/pipeline.hpp>
#include <ctrees/sequence_io.hpp>
#include <ctrees/verify.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kMaxOrder = 500;

ctrees::PowerSeries compute_series(const std::string& name, int order,
                                   ctrees::VariantFlag variant) {
    using namespace ctrees;
    if (name == "trees") return tree_series_check(order);
    if (name == "p" || name == "f") {
        auto [planted, forest] = bootstrap_planted(order, variant);
        return name == "p" ? planted : forest;
    }
    SeriesBundle bundle = make_bundle(order, variant);
    if (name == "c") return bundle.ctree;
    if (name == "cprime") return bundle.node_rooted;
    if (name == "cdot") return bundle.skeleton_rooted;
    throw CLI::ValidationError("unknown series name: " + name);
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path);
    os << text;
    if (!os) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting series and brute-force verification for C-trees "
                 "(connected graphs without overlapping cycles)"};
    app.require_subcommand(1);

    std::string series_name;
    int order = 20;
    bool no_two_cycles = false;
    std::string format = "plain";
    std::string out_path;
    int verify_n = -1;
    int export_n = 1;

    auto* series_cmd = app.add_subcommand("series", "print a counting sequence");
    series_cmd->add_option("name", series_name, "one of: c p f cprime cdot trees")
        ->required()
        ->check(CLI::IsMember({"c", "p", "f", "cprime", "cdot", "trees"}));
    series_cmd->add_option("--order", order, "number of terms")
        ->check(CLI::Range(1, kMaxOrder));
    series_cmd->add_flag("--no-two-cycles", no_two_cycles, "exclude cycles of length 2");
    series_cmd->add_option("--format", format, "plain|json|bfile")
        ->check(CLI::IsMember({"plain", "json", "bfile"}));
    series_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* verify_cmd =
        app.add_subcommand("verify", "compare series coefficients with oracle counts");
    verify_cmd->add_option("n_max", verify_n, "verify n = 1..n_max (default: cap)");
    verify_cmd->add_flag("--no-two-cycles", no_two_cycles, "exclude cycles of length 2");

    auto* export_cmd =
        app.add_subcommand("export", "write DOT files of all C-trees on n nodes");
    export_cmd->add_option("n", export_n, "node count")->required();
    export_cmd->add_flag("--no-two-cycles", no_two_cycles, "exclude cycles of length 2");
    export_cmd->add_option("--out", out_path, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ctrees::VariantFlag variant{!no_two_cycles};
    try {
        if (*series_cmd) {
            ctrees::PowerSeries s = compute_series(series_name, order, variant);
            std::vector<ctrees::Int> values = ctrees::sequence_values(s.truncated(order));
            std::string text;
            switch (ctrees::parse_format(format)) {
                case ctrees::OutputFormat::plain:
                    text = ctrees::format_plain(values);
                    break;
                case ctrees::OutputFormat::bfile:
                    text = ctrees::format_bfile(values);
                    break;
                case ctrees::OutputFormat::json:
                    text = ctrees::format_json(
                        series_name, no_two_cycles ? "no-two-cycles" : "all-cycles",
                        values);
                    break;
            }
            return write_output(text, out_path);
        }
        if (*verify_cmd) {
            int cap = ctrees::VariantCaps::max_nodes(variant.allow_two_cycles);
            int n_max = verify_n < 0 ? cap : verify_n;
            ctrees::VerifyReport report = ctrees::verify(n_max, variant);
            std::cout << ctrees::render_report(report);
            return report.all_pass ? 0 : 1;
        }
        if (*export_cmd) {
            namespace fs = std::filesystem;
            std::error_code ec;
            fs::create_directories(out_path, ec);
            if (ec) {
                std::cerr << "error: cannot create " << out_path << "\n";
                return 3;
            }
            auto reps = ctrees::enumerate_ctrees(export_n, variant.allow_two_cycles);
            int written = 0;
            for (const auto& g : reps) {
                std::string name = "ctree_" + std::to_string(export_n) + "_" +
                                   std::to_string(written);
                std::ofstream os(fs::path(out_path) / (name + ".dot"));
                os << ctrees::to_dot(g, name);
                if (!os) {
                    std::cerr << "error: write failed in " << out_path << "\n";
                    return 3;
                }
                ++written;
            }
            std::cout << written << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

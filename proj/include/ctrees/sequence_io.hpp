#pragma once

// Output formats for coefficient lists: a plain comma-separated line, the
// OEIS b-file convention ("n a(n)" per line, 1-indexed), and a JSON object
// with decimal-string coefficients so consumers never hit integer-width
// limits.

#include <ctrees/power_series.hpp>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace ctrees {

enum class OutputFormat { plain, json, bfile };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "plain") return OutputFormat::plain;
    if (s == "json") return OutputFormat::json;
    if (s == "bfile") return OutputFormat::bfile;
    throw std::invalid_argument("unknown format: " + s);
}

// Coefficients a(1)..a(N) of the series, offset 1.
inline std::vector<Int> sequence_values(const PowerSeries& s) {
    std::vector<Int> v;
    for (int n = 1; n <= s.order(); ++n) v.push_back(s[n]);
    return v;
}

inline std::string format_plain(const std::vector<Int>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i];
    }
    os << "\n";
    return os.str();
}

inline std::string format_bfile(const std::vector<Int>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i)
        os << (i + 1) << " " << values[i] << "\n";
    return os.str();
}

inline std::string format_json(const std::string& name, const std::string& variant,
                               const std::vector<Int>& values) {
    nlohmann::json j;
    j["name"] = name;
    j["variant"] = variant;
    j["order"] = values.size();
    j["offset"] = 1;
    std::vector<std::string> coeffs;
    for (const Int& v : values) coeffs.push_back(v.str());
    j["coefficients"] = coeffs;
    return j.dump(2) + "\n";
}

inline std::vector<Int> parse_bfile(const std::string& text) {
    std::istringstream is(text);
    std::vector<Int> values;
    std::string idx, val;
    long long expected = 1;
    while (is >> idx >> val) {
        if (Int(idx) != expected)
            throw std::invalid_argument("bfile: expected index " + std::to_string(expected));
        values.emplace_back(val);
        ++expected;
    }
    return values;
}

}  // namespace ctrees

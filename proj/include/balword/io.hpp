#pragma once

// CSV and JSON emitters for the scan tables and diagnostics.  Output is
// byte-deterministic: fixed column orders, "%.15g" for reals, exact decimal
// strings for integers and rationals.

#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "counting.hpp"
#include "farey.hpp"
#include "geometry.hpp"
#include "rational.hpp"

namespace balword {

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

inline std::string to_csv(const count_table& table) {
    std::string s = "m,A,B,main_term,error\n";
    for (const auto& row : table.rows) {
        s += std::to_string(row.m);
        s += ',';
        s += row.A.str();
        s += ',';
        s += row.B.str();
        s += ',';
        s += format_real(row.main_term);
        s += ',';
        s += format_real(row.error);
        s += '\n';
    }
    return s;
}

namespace detail {

// Exact integers fit JSON numbers only up to 2^53; fall back to strings.
inline nlohmann::json json_integer(const bigint& v) {
    static const bigint lim = bigint(1) << 53;
    if (v >= 0 && v < lim) return nlohmann::json(v.convert_to<std::uint64_t>());
    if (v < 0 && -v < lim) return nlohmann::json(v.convert_to<std::int64_t>());
    return nlohmann::json(v.str());
}

}  // namespace detail

inline nlohmann::json to_json(const count_table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"m", row.m},
                        {"A", detail::json_integer(row.A)},
                        {"B", detail::json_integer(row.B)},
                        {"main_term", row.main_term},
                        {"error", row.error}});
    }
    return {{"t", to_string(table.t)}, {"u", to_string(table.u)}, {"rows", rows}};
}

inline std::string to_csv(const farey_sequence& seq) {
    std::string s = "index,numerator,denominator\n";
    for (std::size_t i = 0; i < seq.fractions.size(); ++i) {
        s += std::to_string(i + 1);
        s += ',';
        s += std::to_string(seq.fractions[i].num);
        s += ',';
        s += std::to_string(seq.fractions[i].den);
        s += '\n';
    }
    return s;
}

inline std::string error_reports_csv(const std::vector<error_report>& reports) {
    std::string s = "n,exact,main,error,normalized\n";
    for (const auto& r : reports) {
        s += std::to_string(r.n);
        s += ',';
        s += r.exact.str();
        s += ',';
        s += format_real(r.main_term);
        s += ',';
        s += format_real(r.error);
        s += ',';
        s += format_real(r.normalized);
        s += '\n';
    }
    return s;
}

inline std::string franel_csv(const std::vector<std::pair<std::uint64_t, rational>>& rows) {
    std::string s = "m,franel_exact_num,franel_exact_den,franel_float\n";
    for (const auto& [m, value] : rows) {
        s += std::to_string(m);
        s += ',';
        s += numerator(value).str();
        s += ',';
        s += denominator(value).str();
        s += ',';
        s += format_real(to_double(value));
        s += '\n';
    }
    return s;
}

inline std::string expsum_csv(const std::vector<expsum_row>& rows) {
    std::string s = "m,sum_re,sum_im,mertens\n";
    for (const auto& r : rows) {
        s += std::to_string(r.m);
        s += ',';
        s += format_real(r.sum.real());
        s += ',';
        s += format_real(r.sum.imag());
        s += ',';
        s += std::to_string(r.mertens);
        s += '\n';
    }
    return s;
}

inline std::string gcdsum_csv(const std::vector<std::pair<std::uint64_t, error_report>>& rows) {
    std::string s = "k,box,sum,main_term,error,normalized\n";
    for (const auto& [k, r] : rows) {
        s += std::to_string(k);
        s += ',';
        s += std::to_string(std::uint64_t(1) << k);
        s += ',';
        s += r.exact.str();
        s += ',';
        s += format_real(r.main_term);
        s += ',';
        s += format_real(r.error);
        s += ',';
        s += format_real(r.normalized);
        s += '\n';
    }
    return s;
}

// Debug dump of a word's half-plane systems, one entry per branch.
inline nlohmann::json parameter_system_json(const word& w,
                                            coding_convention conv =
                                                coding_convention::lower_floor) {
    nlohmann::json branches = nlohmann::json::array();
    const int max_branch = conv == coding_convention::lower_floor ? 1 : 2;
    for (int branch = 0; branch <= max_branch; ++branch) {
        nlohmann::json constraints = nlohmann::json::array();
        for (const auto& lc : parameter_system(w, branch, conv).constraints) {
            constraints.push_back({{"a", to_string(lc.a)},
                                   {"b", to_string(lc.b)},
                                   {"c", to_string(lc.c)},
                                   {"strict", lc.strict}});
        }
        branches.push_back({{"branch", branch}, {"constraints", constraints}});
    }
    return {{"word", w.str()}, {"branches", branches}};
}

}  // namespace balword

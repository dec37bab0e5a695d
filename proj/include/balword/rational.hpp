#pragma once

// Exact arbitrary-precision integers and fractions, plus the handful of
// floor/ceil/fractional-part helpers the rest of the library leans on.
// Counts are step functions of the rational inputs, so nothing here is
// allowed to round: decimal strings are scaled by powers of ten, never
// routed through binary floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "common.hpp"

namespace balword {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint numerator(const rational& r) { return boost::multiprecision::numerator(r); }
inline bigint denominator(const rational& r) { return boost::multiprecision::denominator(r); }

// Floor division (quotient rounded toward minus infinity); b != 0.
inline bigint floor_div(const bigint& a, const bigint& b) {
    bigint q = a / b;  // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bigint floor_of(const rational& r) { return floor_div(numerator(r), denominator(r)); }
inline bigint ceil_of(const rational& r) { return -floor_div(-numerator(r), denominator(r)); }

// <x> = x - floor(x), exact, always in [0,1).
inline rational frac_part(const rational& r) { return r - rational(floor_of(r)); }

inline double to_double(const rational& r) { return r.convert_to<double>(); }

inline bigint from_uint128(uint128 v) {
    bigint hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

inline bigint from_int128(int128 v) {
    return v < 0 ? -from_uint128(static_cast<uint128>(-v)) : from_uint128(static_cast<uint128>(v));
}

inline std::optional<std::int64_t> to_int64(const bigint& v) {
    static const bigint lo = std::numeric_limits<std::int64_t>::min();
    static const bigint hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return std::nullopt;
    return v.convert_to<std::int64_t>();
}

// Parses "p/q", an integer, or a decimal string ("0.59" -> 59/100), exactly.
inline rational parse_rational(std::string_view s) {
    const std::string original(s);
    auto fail = [&original]() -> rational {
        throw std::domain_error("not a rational literal: '" + original + "'");
    };
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return fail();
    auto digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char ch : v)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!digits(p) || !digits(q)) return fail();
        bigint d{std::string(q)};
        if (d == 0) return fail();
        out = rational(bigint{std::string(p)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) return fail();
        if (!ip.empty() && !digits(ip)) return fail();
        if (!fp.empty() && !digits(fp)) return fail();
        bigint scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        bigint whole = ip.empty() ? bigint(0) : bigint{std::string(ip)};
        bigint frac = fp.empty() ? bigint(0) : bigint{std::string(fp)};
        out = rational(whole * scale + frac, scale);
    } else {
        if (!digits(s)) return fail();
        out = rational(bigint{std::string(s)});
    }
    return negative ? rational(-out) : out;
}

// "p/q" when the denominator is nontrivial, plain "p" otherwise.
inline std::string to_string(const rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

}  // namespace balword

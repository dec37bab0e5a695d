#pragma once

// Deterministic random-input generators shared by the unit tests, the
// acceptance suite, and the fixtures calibration tool.  Everything is
// seeded, so calibrated constants and the values they are checked against
// come from identical inputs.

#include <balword/rational.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

inline constexpr std::uint64_t fixed_seed = 0x5eedba11u;

// p/q with 1 <= p <= q <= max_den (always in (0, 1]).
inline balword::rational random_threshold(std::mt19937_64& rng, std::uint64_t max_den) {
    const std::uint64_t q = 1 + rng() % max_den;
    const std::uint64_t p = 1 + rng() % q;
    return balword::rational(balword::bigint(p), balword::bigint(q));
}

struct rect {
    balword::rational a, b, c, d;  // 0 <= a < b <= 1, 0 <= c < d <= 1
};

inline rect random_rectangle(std::mt19937_64& rng, std::uint64_t max_den = 20) {
    auto pick_pair = [&](balword::rational& lo, balword::rational& hi) {
        for (;;) {
            const std::uint64_t q = 2 + rng() % (max_den - 1);
            const std::uint64_t p1 = rng() % (q + 1), p2 = rng() % (q + 1);
            if (p1 == p2) continue;
            lo = balword::rational(balword::bigint(std::min(p1, p2)), balword::bigint(q));
            hi = balword::rational(balword::bigint(std::max(p1, p2)), balword::bigint(q));
            return;
        }
    };
    rect r;
    pick_pair(r.a, r.b);
    pick_pair(r.c, r.d);
    return r;
}

inline std::vector<rect> fixed_rectangles(std::size_t count) {
    std::mt19937_64 rng(fixed_seed);
    std::vector<rect> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_rectangle(rng));
    return out;
}

inline std::vector<std::pair<balword::rational, balword::rational>> fixed_thresholds(
    std::size_t count, std::uint64_t max_den) {
    std::mt19937_64 rng(fixed_seed ^ 0x7177);
    std::vector<std::pair<balword::rational, balword::rational>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto t = random_threshold(rng, max_den);
        auto u = random_threshold(rng, max_den);
        out.emplace_back(std::move(t), std::move(u));
    }
    return out;
}

}  // namespace testing_support

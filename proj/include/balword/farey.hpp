#pragma once

// Integer-sequence infrastructure: a linear sieve for the totient and
// Moebius functions, summatory totients, the Mertens function, and Farey
// sequence generation by the classical neighbor recurrence.

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"
#include "rational.hpp"

namespace balword {

struct sieve_tables {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> phi;  // phi[k], 1 <= k <= limit
    std::vector<std::int8_t> mu;     // mu[k] in {-1,0,1}
};

inline constexpr std::uint64_t max_sieve_limit = 200'000'000;

// One linear (Euler) pass fills both phi and mu.
inline sieve_tables build_sieve(std::uint64_t limit) {
    if (limit == 0) throw std::domain_error("sieve limit must be positive");
    if (limit > max_sieve_limit)
        throw resource_error("sieve limit " + std::to_string(limit) + " exceeds " +
                             std::to_string(max_sieve_limit));
    sieve_tables t;
    t.limit = limit;
    t.phi.assign(limit + 1, 0);
    t.mu.assign(limit + 1, 0);
    t.phi[1] = 1;
    t.mu[1] = 1;
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            t.phi[i] = static_cast<std::uint32_t>(i - 1);
            t.mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                t.phi[ip] = static_cast<std::uint32_t>(std::uint64_t(t.phi[i]) * p);
                t.mu[ip] = 0;
                break;
            }
            t.phi[ip] = static_cast<std::uint32_t>(std::uint64_t(t.phi[i]) * (p - 1));
            t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
        }
    }
    return t;
}

inline sieve_tables totient_sieve(std::uint64_t limit) { return build_sieve(limit); }
inline sieve_tables mobius_sieve(std::uint64_t limit) { return build_sieve(limit); }

// Prefix sums Phi(k) = sum_{j<=k} phi(j) for k = 0..limit.
inline std::vector<std::uint64_t> totient_prefix(const sieve_tables& t) {
    std::vector<std::uint64_t> acc(t.limit + 1, 0);
    for (std::uint64_t k = 1; k <= t.limit; ++k) acc[k] = acc[k - 1] + t.phi[k];
    return acc;
}

// Phi(m) = sum_{k<=m} phi(k).
inline bigint totient_summatory(std::uint64_t m, const sieve_tables& t) {
    if (m == 0 || m > t.limit) throw std::domain_error("summatory argument outside sieve range");
    uint128 acc = 0;
    for (std::uint64_t k = 1; k <= m; ++k) acc += t.phi[k];
    return from_uint128(acc);
}

inline bigint totient_summatory(std::uint64_t m) { return totient_summatory(m, build_sieve(m)); }

// M(m) = sum_{k<=m} mu(k).
inline std::int64_t mertens(std::uint64_t m, const sieve_tables& t) {
    if (m == 0 || m > t.limit) throw std::domain_error("mertens argument outside sieve range");
    std::int64_t acc = 0;
    for (std::uint64_t k = 1; k <= m; ++k) acc += t.mu[k];
    return acc;
}

inline std::int64_t mertens(std::uint64_t m) { return mertens(m, build_sieve(m)); }

// Irreducible fraction with a machine-word numerator and denominator.
struct farey_fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    rational as_rational() const { return rational(bigint(num), bigint(den)); }
    friend bool operator==(const farey_fraction&, const farey_fraction&) = default;
};

// Ordered irreducible fractions of denominator <= order in [0,1); the list
// has Phi(order) entries and starts at 0/1.
struct farey_sequence {
    std::uint64_t order = 0;
    std::vector<farey_fraction> fractions;

    static farey_sequence of_order(std::uint64_t m) {
        if (m == 0) throw std::domain_error("farey order must be positive");
        // ~3 m^2 / pi^2 entries; keep materialized lists at desk scale
        if (m > 8000)
            throw resource_error("farey order " + std::to_string(m) +
                                 " would materialize too many fractions (limit 8000)");
        farey_sequence f;
        f.order = m;
        f.fractions.push_back({0, 1});
        if (m == 1) return f;
        // neighbor recurrence, stopping before 1/1
        std::uint64_t a = 0, b = 1, c = 1, d = m;
        while (c != d) {
            f.fractions.push_back({c, d});
            const std::uint64_t k = (m + b) / d;
            const std::uint64_t a2 = c, b2 = d;
            c = k * c - a;
            d = k * d - b;
            a = a2;
            b = b2;
        }
        return f;
    }
};

}  // namespace balword

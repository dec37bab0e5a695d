#pragma once

// Counting balanced words with slope in [1-t, 1] and intercept in [0, u).
//
// The quantities:
//   A(m,t,u) = #{ (i,j) : 0 <= i < j <= m, gcd(i,j)=1, i/j <= t, <m i/j> < u }
//   B(n,t,u) = 1 + sum_{m<=n} A(m,t,u)
//   B(n,1,1) = 1 + sum_{k<=n} (n+1-k) phi(k)        (closed formula)
//
// The convention is fixed once and reproduced bit-exactly by every path:
// i/j <= t inclusive, <m i/j> < u strict.  Four evaluation routes stay
// independent so they can cross-check each other:
//   * count_A_naive / count_B_theorem: pair enumeration (gcd per pair, or a
//     gcd-built coprimality index when scanning many m),
//   * count_B_classic: the totient-sieve closed formula,
//   * count_A_fast_u1: Moebius inversion over floor sums (u = 1 only),
//   * count_B_fast: per-pair m-interval counting, where m -> (m i mod j)
//     walks every residue class once per j consecutive m, so full cycles
//     contribute the residue count and the partial cycle is two Euclidean
//     floor sums.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "common.hpp"
#include "farey.hpp"
#include "parallel.hpp"
#include "rational.hpp"

namespace balword {

struct threshold {
    rational t;
    rational u;

    threshold(rational t_, rational u_) : t(std::move(t_)), u(std::move(u_)) {
        if (t <= 0 || t > 1) throw std::domain_error("threshold t must lie in (0,1]");
        if (u <= 0 || u > 1) throw std::domain_error("threshold u must lie in (0,1]");
    }
};

namespace detail {

// Numerators/denominators small enough for 64-bit cross multiplication
// against indices below 2^31.
struct small_threshold {
    std::uint64_t tp, tq, up, uq;
};

inline std::optional<small_threshold> to_small(const threshold& th) {
    const bigint lim = bigint(1) << 31;
    const bigint tp = numerator(th.t), tq = denominator(th.t);
    const bigint up = numerator(th.u), uq = denominator(th.u);
    if (tp >= lim || tq >= lim || up >= lim || uq >= lim) return std::nullopt;
    return small_threshold{tp.convert_to<std::uint64_t>(), tq.convert_to<std::uint64_t>(),
                           up.convert_to<std::uint64_t>(), uq.convert_to<std::uint64_t>()};
}

inline bigint count_A_naive_generic(std::uint64_t m, const threshold& th) {
    bigint count = 0;
    for (std::uint64_t j = 1; j <= m; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            if (std::gcd(i, j) != 1) continue;
            if (rational(bigint(i), bigint(j)) > th.t) continue;
            if (frac_part(rational(bigint(m) * i, bigint(j))) < th.u) ++count;
        }
    return count;
}

}  // namespace detail

// Reference evaluation of A(m,t,u): plain double loop over pairs, one gcd
// and two exact comparisons each.  O(m^2); every faster path is tested
// against this.
inline bigint count_A_naive(std::uint64_t m, const threshold& th) {
    if (m == 0) throw std::domain_error("m must be positive");
    const auto small = detail::to_small(th);
    if (!small) return detail::count_A_naive_generic(m, th);
    const auto [tp, tq, up, uq] = *small;
    uint128 count = 0;
    for (std::uint64_t j = 1; j <= m; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            if (std::gcd(i, j) != 1) continue;
            if (uint128(i) * tq > uint128(tp) * j) continue;
            const std::uint64_t r = static_cast<std::uint64_t>((uint128(m) * i) % j);
            if (uint128(uq) * r < uint128(up) * j) ++count;
        }
    return from_uint128(count);
}

namespace detail {

// Per-j coprimality bitmaps with block popcount prefixes, built from plain
// gcd tests (no sieve involved, so sieve-based routes stay independent).
// Bit i of the j-th map is set when 1 <= i < j and gcd(i,j) = 1.
class coprime_index {
public:
    explicit coprime_index(std::uint64_t n) : n_(n), word_off_(n + 2, 0), total_(n + 1, 0) {
        for (std::uint64_t j = 0; j <= n; ++j) word_off_[j + 1] = word_off_[j] + words_for(j);
        bits_.assign(word_off_[n + 1], 0);
        pop_prefix_.assign(word_off_[n + 1], 0);
        for (std::uint64_t j = 2; j <= n; ++j) {
            const std::uint64_t off = word_off_[j];
            for (std::uint64_t i = 1; i < j; ++i)
                if (std::gcd(i, j) == 1) bits_[off + (i >> 6)] |= std::uint64_t(1) << (i & 63);
            std::uint32_t acc = 0;
            for (std::uint64_t w = 0; w < words_for(j); ++w) {
                pop_prefix_[off + w] = acc;
                acc += static_cast<std::uint32_t>(__builtin_popcountll(bits_[off + w]));
            }
            total_[j] = acc;
        }
    }

    std::uint64_t order() const { return n_; }

    // #{ i in [1, imax] : gcd(i,j) = 1 }, imax <= j-1.
    std::uint32_t count_leq(std::uint64_t j, std::uint64_t imax) const {
        const std::uint64_t len = imax + 1;  // bits [0, len), bit 0 never set
        if (len >= j) return total_[j];
        const std::uint64_t off = word_off_[j], full = len >> 6, rem = len & 63;
        std::uint32_t cnt = pop_prefix_[off + full];
        if (rem)
            cnt += static_cast<std::uint32_t>(
                __builtin_popcountll(bits_[off + full] & ((std::uint64_t(1) << rem) - 1)));
        return cnt;
    }

    std::uint64_t bit(std::uint64_t j, std::uint64_t i) const {
        return (bits_[word_off_[j] + (i >> 6)] >> (i & 63)) & 1u;
    }

    std::uint32_t coprime_count(std::uint64_t j) const { return total_[j]; }

private:
    static std::uint64_t words_for(std::uint64_t j) { return j == 0 ? 0 : (j + 63) >> 6; }

    std::uint64_t n_;
    std::vector<std::uint64_t> word_off_;
    std::vector<std::uint32_t> total_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> pop_prefix_;
};

// A(m,t,u) for one m against a prebuilt index.  The inner walk keeps
// r = (m i mod j) incrementally, so there is no division in the loop.
inline std::uint64_t count_A_indexed(std::uint64_t m, const small_threshold& th,
                                     const coprime_index& idx) {
    const auto [tp, tq, up, uq] = th;
    std::uint64_t a = 1;  // the pair (0,1)
    for (std::uint64_t j = 2; j <= m; ++j) {
        const std::uint64_t imax = std::min<std::uint64_t>(j - 1, (tp * j) / tq);
        if (imax == 0) continue;
        const std::uint64_t mmod = m % j;
        if (up == uq || mmod == 0) {
            // the fractional condition holds for every i
            a += idx.count_leq(j, imax);
            continue;
        }
        const std::uint64_t upj = up * j;
        std::uint64_t r = mmod, cnt = 0;
        for (std::uint64_t i = 1; i <= imax; ++i) {
            cnt += idx.bit(j, i) & static_cast<std::uint64_t>(uq * r < upj);
            r += mmod;
            if (r >= j) r -= j;
        }
        a += cnt;
    }
    return a;
}

// A(m,t,u) for every m in [1, n] by pair enumeration.  The coprimality
// index takes n^2/16 bytes, so the pair route is capped at desk scale.
inline constexpr std::uint64_t max_theorem_n = 40'000;

inline std::vector<std::uint64_t> theorem_A_table(std::uint64_t n, const threshold& th,
                                                  unsigned workers = 0) {
    if (n > max_theorem_n)
        throw resource_error("pair-enumeration range " + std::to_string(n) + " exceeds " +
                             std::to_string(max_theorem_n));
    std::vector<std::uint64_t> table(n + 1, 0);
    const auto small = to_small(th);
    if (small) {
        const coprime_index idx(n);
        parallel_for(
            1, n + 1,
            [&](std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t m = lo; m < hi; ++m) table[m] = count_A_indexed(m, *small, idx);
            },
            workers);
    } else {
        parallel_for(
            1, n + 1,
            [&](std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t m = lo; m < hi; ++m)
                    table[m] = count_A_naive_generic(m, th).convert_to<std::uint64_t>();
            },
            workers);
    }
    return table;
}

}  // namespace detail

// B(n,t,u) = 1 + sum_{m<=n} A(m,t,u), by pair enumeration.
inline bigint count_B_theorem(std::uint64_t n, const threshold& th, unsigned workers = 0) {
    if (n == 0) throw std::domain_error("n must be positive");
    const auto table = detail::theorem_A_table(n, th, workers);
    uint128 acc = 1;
    for (std::uint64_t m = 1; m <= n; ++m) acc += table[m];
    return from_uint128(acc);
}

// Closed formula 1 + sum_{k<=n} (n+1-k) phi(k), via the linear sieve.
inline bigint count_B_classic(std::uint64_t n, const sieve_tables& tables) {
    if (n == 0) throw std::domain_error("n must be positive");
    if (tables.limit < n) throw std::domain_error("sieve too small for count_B_classic");
    uint128 acc = 1;
    for (std::uint64_t k = 1; k <= n; ++k) acc += uint128(n + 1 - k) * tables.phi[k];
    return from_uint128(acc);
}

inline bigint count_B_classic(std::uint64_t n) {
    if (n == 0) throw std::domain_error("n must be positive");
    return count_B_classic(n, build_sieve(n));
}

namespace detail {

// sum_{x=0}^{n-1} floor((a x + b) / c) for c >= 1, any sign of a and b.
template <class T>
T floor_sum_signed(T n, T a, T b, T c) {
    T ans = 0;
    if (n <= 0) return ans;
    if (a < 0) {
        T a2 = a % c;
        if (a2 < 0) a2 += c;
        ans -= n * (n - 1) / 2 * ((a2 - a) / c);
        a = a2;
    }
    if (b < 0) {
        T b2 = b % c;
        if (b2 < 0) b2 += c;
        ans -= n * ((b2 - b) / c);
        b = b2;
    }
    while (true) {
        if (a >= c) {
            ans += n * (n - 1) / 2 * (a / c);
            a %= c;
        }
        if (b >= c) {
            ans += n * (b / c);
            b %= c;
        }
        const T y_max = a * n + b;
        if (y_max < c) break;
        n = y_max / c;
        b = y_max % c;
        std::swap(a, c);
    }
    return ans;
}

}  // namespace detail

// sum_{b=1}^{B} floor(b t) for rational t = p/q >= 0, in O(log max(p,q,B)).
inline bigint floor_sum(std::uint64_t B, const rational& t) {
    if (t < 0) throw std::domain_error("floor_sum needs t >= 0");
    if (B == 0) return 0;
    const bigint p = numerator(t), q = denominator(t);
    const bigint lim = bigint(1) << 31;
    if (p < lim && q < lim && B < (std::uint64_t(1) << 31)) {
        return from_int128(detail::floor_sum_signed<int128>(
            int128(B) + 1, p.convert_to<std::int64_t>(), 0, q.convert_to<std::int64_t>()));
    }
    return detail::floor_sum_signed<bigint>(bigint(B) + 1, p, bigint(0), q);
}

// A(m,t,1) = 1 + sum_{k<=m} mu(k) * sum_{b<=m/k} floor(b t), for 0 < t < 1.
inline bigint count_A_fast_u1(std::uint64_t m, const rational& t, const sieve_tables& tables) {
    if (m == 0) throw std::domain_error("m must be positive");
    if (t >= 1) throw std::domain_error("count_A_fast_u1 needs t < 1 (A(m,1,1) is Phi(m))");
    if (t <= 0) throw std::domain_error("count_A_fast_u1 needs t > 0");
    if (tables.limit < m) throw std::domain_error("sieve too small for count_A_fast_u1");
    bigint acc = 1;
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (tables.mu[k] == 0) continue;
        const bigint s = floor_sum(m / k, t);
        acc += tables.mu[k] > 0 ? s : -s;
    }
    return acc;
}

inline bigint count_A_fast_u1(std::uint64_t m, const rational& t) {
    if (m == 0) throw std::domain_error("m must be positive");
    return count_A_fast_u1(m, t, build_sieve(m));
}

// B(n,t,u) = 1 + n + sum over coprime pairs 1 <= i < j <= n with i/j <= t of
//   N(i,j) = #{ m in [j, n] : (m i mod j) < thr(j) },
// where thr(j) = #{ c in [0,j) : uq c < up j }.  Because m -> (m i mod j)
// is a bijection on residues over any j consecutive m, N(i,j) needs only
// floor(n/j) full cycles plus a partial cycle counted by two floor sums.
inline bigint count_B_fast(std::uint64_t n, const threshold& th, unsigned workers = 0) {
    if (n == 0) throw std::domain_error("n must be positive");
    if (n >= (std::uint64_t(1) << 31))
        throw resource_error("count_B_fast is limited to n < 2^31");
    const auto small = detail::to_small(th);
    if (!small) return count_B_theorem(n, th, workers);  // exact, slower
    const auto [tp, tq, up, uq] = *small;

    uint128 total = uint128(1) + n;
    std::mutex total_mutex;
    parallel_for(
        2, n + 1,
        [&, tp = tp, tq = tq, up = up, uq = uq](std::uint64_t lo, std::uint64_t hi) {
            uint128 acc = 0;
            for (std::uint64_t j = lo; j < hi; ++j) {
                const std::uint64_t imax = std::min<std::uint64_t>(j - 1, (tp * j) / tq);
                if (imax == 0) continue;
                const std::uint64_t upj = up * j;
                const std::uint64_t thr = upj % uq == 0 ? upj / uq : upj / uq + 1;
                const std::uint64_t full = n / j, rem = n % j;
                for (std::uint64_t i = 1; i <= imax; ++i) {
                    if (std::gcd(i, j) != 1) continue;
                    if (thr == j) {
                        acc += n - j + 1;  // every residue qualifies
                        continue;
                    }
                    // #{ m in [1, rem] : (m i mod j) < thr }
                    const int128 part =
                        detail::floor_sum_signed<int128>(int128(rem) + 1, int128(i), 0, int128(j)) -
                        detail::floor_sum_signed<int128>(int128(rem) + 1, int128(i), -int128(thr),
                                                         int128(j)) -
                        1;
                    // minus the j-1 leading m (they hold thr-1 qualifying residues)
                    acc += uint128(full * thr + static_cast<std::uint64_t>(part) - (thr - 1));
                }
            }
            // integer addition commutes, so the total is worker-count independent
            const std::lock_guard<std::mutex> lock(total_mutex);
            total += acc;
        },
        workers);
    return from_uint128(total);
}

// Per-m table of A, cumulative B, the t u m^3 / pi^2 main term, and the
// signed deviation from it.
struct count_row {
    std::uint64_t m = 0;
    bigint A;
    bigint B;
    double main_term = 0.0;
    double error = 0.0;
};

struct count_table {
    rational t;
    rational u;
    std::vector<count_row> rows;
};

inline constexpr std::uint64_t max_scan_rows = 2'000'000;

inline count_table scan(std::uint64_t n_max, const threshold& th, unsigned workers = 0) {
    if (n_max == 0) throw std::domain_error("n_max must be positive");
    if (n_max > max_scan_rows)
        throw resource_error("scan range " + std::to_string(n_max) + " exceeds " +
                             std::to_string(max_scan_rows));
    const auto table = detail::theorem_A_table(n_max, th, workers);
    count_table out;
    out.t = th.t;
    out.u = th.u;
    out.rows.reserve(n_max);
    const double tu = to_double(th.t) * to_double(th.u);
    constexpr double pi = 3.14159265358979323846;
    uint128 running = 1;
    for (std::uint64_t m = 1; m <= n_max; ++m) {
        running += table[m];
        count_row row;
        row.m = m;
        row.A = table[m];
        row.B = from_uint128(running);
        const double md = static_cast<double>(m);
        row.main_term = tu * md * md * md / (pi * pi);
        row.error = static_cast<double>(row.B.convert_to<long double>() -
                                        static_cast<long double>(row.main_term));
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace balword

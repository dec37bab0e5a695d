#pragma once

// Finite-range evaluation of the asymptotic main terms and error statistics:
//   B(n,1,1) vs (n^3 + 3n^2)/pi^2, Phi(n) vs 3n^2/pi^2,
//   sum_{m<=x} (x-m) phi(m) vs x^3/pi^2,
//   the Franel integral  int_0^1 (A(m,t,1) - t Phi(m))^2 dt  (exact rational),
//   the Farey exponential sum against the Mertens function,
//   the Moebius fractional-part sum  sum_{k b <= m <= n} mu(k) <b t>,
//   the gcd box sum over (H,2H] x (M,2M], and the A(m,t,u) main term.
//
// Every "exact" value is a big integer or rational; only main terms and
// normalized errors are doubles.  Normalization scales follow the error
// exponents these statistics are compared against (n^2, n^{3/2}, m^{3/2},
// n log n, H*M), so scans make the claimed decay visible directly.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "common.hpp"
#include "counting.hpp"
#include "farey.hpp"
#include "rational.hpp"

namespace balword {

inline constexpr double pi_value = 3.14159265358979323846;

struct error_report {
    std::uint64_t n = 0;
    bigint exact;
    double main_term = 0.0;
    double error = 0.0;       // exact - main_term
    double normalized = 0.0;  // error / scale
};

namespace detail {

inline error_report make_report(std::uint64_t n, bigint exact, double main, double scale) {
    error_report r;
    r.n = n;
    r.main_term = main;
    r.error = static_cast<double>(exact.convert_to<long double>() -
                                  static_cast<long double>(main));
    r.normalized = r.error / scale;
    r.exact = std::move(exact);
    return r;
}

}  // namespace detail

// t u n^3 / pi^2.
inline double main_term_B(std::uint64_t n, const rational& t, const rational& u) {
    const double nd = static_cast<double>(n);
    return to_double(t) * to_double(u) * nd * nd * nd / (pi_value * pi_value);
}

// B(n,1,1) against (n^3 + 3n^2)/pi^2, normalized by n^{3/2}.
inline std::vector<error_report> error_B11_scan(std::uint64_t n_max, const sieve_tables& tables) {
    if (n_max == 0) throw std::domain_error("n_max must be positive");
    if (tables.limit < n_max) throw std::domain_error("sieve too small for error_B11_scan");
    std::vector<error_report> out;
    out.reserve(n_max);
    uint128 phi_sum = 0, b = 1;  // Phi(n) and B(n,1,1) = 1 + sum_{m<=n} Phi(m)
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        phi_sum += tables.phi[n];
        b += phi_sum;
        const double nd = static_cast<double>(n);
        const double main = (nd * nd * nd + 3.0 * nd * nd) / (pi_value * pi_value);
        out.push_back(detail::make_report(n, from_uint128(b), main, std::pow(nd, 1.5)));
    }
    return out;
}

inline std::vector<error_report> error_B11_scan(std::uint64_t n_max) {
    return error_B11_scan(n_max, build_sieve(n_max));
}

inline error_report error_B11(std::uint64_t n) { return error_B11_scan(n).back(); }

// Phi(n) against 3n^2/pi^2, normalized by n log(n+2).
inline error_report mertens_error_phi(std::uint64_t n, const sieve_tables& tables) {
    if (n == 0) throw std::domain_error("n must be positive");
    const bigint phi_n = totient_summatory(n, tables);
    const double nd = static_cast<double>(n);
    const double main = 3.0 * nd * nd / (pi_value * pi_value);
    return detail::make_report(n, phi_n, main, nd * std::log(nd + 2.0));
}

inline error_report mertens_error_phi(std::uint64_t n) {
    return mertens_error_phi(n, build_sieve(n));
}

// sum_{m<=x} (x-m) phi(m), exact, against x^3/pi^2 (normalized x^{3/2}).
inline std::pair<bigint, error_report> weighted_totient_sum(std::uint64_t x,
                                                            const sieve_tables& tables) {
    if (x == 0) throw std::domain_error("x must be positive");
    if (tables.limit < x) throw std::domain_error("sieve too small for weighted_totient_sum");
    uint128 acc = 0;
    for (std::uint64_t m = 1; m <= x; ++m) acc += uint128(x - m) * tables.phi[m];
    const bigint exact = from_uint128(acc);
    const double xd = static_cast<double>(x);
    const double main = xd * xd * xd / (pi_value * pi_value);
    return {exact, detail::make_report(x, exact, main, std::pow(xd, 1.5))};
}

inline std::pair<bigint, error_report> weighted_totient_sum(std::uint64_t x) {
    return weighted_totient_sum(x, build_sieve(x));
}

// Exact Franel integral int_0^1 (A(m,t,1) - t Phi(m))^2 dt.  A(m,.,1) is
// the right-continuous step function counting Farey fractions <= t, so the
// integral is a sum of closed-form pieces over Farey gaps, with the last
// gap ending at 1.  No floating point is involved.
inline rational franel_integral(const farey_sequence& seq) {
    const std::uint64_t count = seq.fractions.size();
    const bigint big_count(count);
    rational total = 0;
    const rational scale(bigint(3) * big_count, 1);
    for (std::uint64_t i = 1; i <= count; ++i) {
        const rational fi = seq.fractions[i - 1].as_rational();
        const rational fj = i < count ? seq.fractions[i].as_rational() : rational(1);
        // antiderivative of (i - t Phi)^2 is -(i - t Phi)^3 / (3 Phi)
        const rational lo = rational(bigint(i)) - fi * big_count;
        const rational hi = rational(bigint(i)) - fj * big_count;
        total += (lo * lo * lo - hi * hi * hi) / scale;
    }
    return total;
}

inline rational franel_integral(std::uint64_t m) {
    return franel_integral(farey_sequence::of_order(m));
}

// Floating-point Farey exponential sum paired with the exact integer it
// equals, the Mertens function (each denominator j contributes the
// Ramanujan sum  sum_{(i,j)=1} e(i/j) = mu(j)).
struct expsum_row {
    std::uint64_t m = 0;
    std::complex<double> sum;
    std::int64_t mertens = 0;
};

inline std::vector<expsum_row> farey_exponential_scan(std::uint64_t m_max,
                                                      const sieve_tables& tables) {
    if (m_max == 0) throw std::domain_error("m_max must be positive");
    if (tables.limit < m_max) throw std::domain_error("sieve too small for exponential scan");
    std::vector<expsum_row> rows;
    rows.reserve(m_max);
    std::complex<double> acc(0.0, 0.0);
    std::int64_t mert = 0;
    for (std::uint64_t j = 1; j <= m_max; ++j) {
        if (j == 1) {
            acc += std::complex<double>(1.0, 0.0);  // the fraction 0/1
        } else {
            for (std::uint64_t i = 1; i < j; ++i) {
                if (std::gcd(i, j) != 1) continue;
                const double angle = 2.0 * pi_value * static_cast<double>(i) /
                                     static_cast<double>(j);
                acc += std::complex<double>(std::cos(angle), std::sin(angle));
            }
        }
        mert += tables.mu[j];
        rows.push_back({j, acc, mert});
    }
    return rows;
}

inline std::vector<expsum_row> farey_exponential_scan(std::uint64_t m_max) {
    return farey_exponential_scan(m_max, build_sieve(m_max));
}

inline expsum_row farey_exponential_sum(std::uint64_t m) {
    return farey_exponential_scan(m).back();
}

// Exact rational sum_{m<=n} sum_{k b <= m} mu(k) <b t>.  Each pair (k,b)
// with k b <= n occurs in n - k b + 1 of the inner sums, and <b t> has
// denominator q, so the whole sum is an integer combination over q.
inline rational mu_frac_sum(std::uint64_t n, const rational& t, const sieve_tables& tables) {
    if (n == 0) throw std::domain_error("n must be positive");
    if (t < 0) throw std::domain_error("mu_frac_sum needs t >= 0");
    if (tables.limit < n) throw std::domain_error("sieve too small for mu_frac_sum");
    const bigint p = numerator(t), q = denominator(t);
    const bigint lim = bigint(1) << 31;
    if (p < lim && q < lim && n < (std::uint64_t(1) << 20)) {
        const std::uint64_t ps = p.convert_to<std::uint64_t>(), qs = q.convert_to<std::uint64_t>();
        int128 acc = 0;
        for (std::uint64_t k = 1; k <= n; ++k) {
            if (tables.mu[k] == 0) continue;
            int128 inner = 0;
            for (std::uint64_t b = 1; b * k <= n; ++b)
                inner += int128((uint128(b) * ps) % qs) * int128(n - k * b + 1);
            acc += tables.mu[k] > 0 ? inner : -inner;
        }
        return rational(from_int128(acc), q);
    }
    bigint acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (tables.mu[k] == 0) continue;
        bigint inner = 0;
        for (std::uint64_t b = 1; b * k <= n; ++b)
            inner += ((bigint(b) * p) % q) * bigint(n - k * b + 1);
        acc += tables.mu[k] > 0 ? inner : -inner;
    }
    return rational(acc, q);
}

inline rational mu_frac_sum(std::uint64_t n, const rational& t) {
    return mu_frac_sum(n, t, build_sieve(n));
}

// sum_{H<h<=2H, M<a<=2M} gcd(h,a) against (6 H M / pi^2) log(2 min(H,M)),
// normalized by H M.
inline std::pair<bigint, error_report> gcd_box_sum(std::uint64_t H, std::uint64_t M) {
    if (H == 0 || M == 0) throw std::domain_error("H and M must be positive");
    if (uint128(H) * M > 1'000'000'000)
        throw resource_error("gcd box of " + std::to_string(H) + " x " + std::to_string(M) +
                             " cells is too large");
    uint128 acc = 0;
    for (std::uint64_t h = H + 1; h <= 2 * H; ++h)
        for (std::uint64_t a = M + 1; a <= 2 * M; ++a) acc += std::gcd(h, a);
    const bigint exact = from_uint128(acc);
    const double hd = static_cast<double>(H), md = static_cast<double>(M);
    const double main = 6.0 * hd * md / (pi_value * pi_value) *
                        std::log(2.0 * static_cast<double>(std::min(H, M)));
    return {exact, detail::make_report(std::min(H, M), exact, main, hd * md)};
}

// A(m,t,u) against 3 t u m^2 / pi^2, normalized by m^{3/2}.
inline error_report A_asymptotic_check(std::uint64_t m, const threshold& th) {
    const bigint exact = count_A_naive(m, th);
    const double md = static_cast<double>(m);
    const double main = 3.0 * to_double(th.t) * to_double(th.u) * md * md / (pi_value * pi_value);
    return detail::make_report(m, exact, main, std::pow(md, 1.5));
}

}  // namespace balword

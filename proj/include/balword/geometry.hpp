#pragma once

// Geometric oracle, independent of the counting formulas.
//
// Two half-plane descriptions of "where a word lives" in the parameter
// square (x, y) = (intercept, 1 - slope) are used:
//
//  * parameter_system(w, branch): the exact preimage of the coding map
//    coding(x,y,n) (letters floor((k+1)(1-y)+x) - floor(k(1-y)+x)).  The
//    preimage splits by branch = floor((1-y)+x) into at most two convex
//    pieces.  This is the round-trip companion of coding().
//
//  * partition_cell(w): the cell of the square's partition by the segments
//    x = k y - l (k <= n, 0 <= l < k), which is the structure the counting
//    formulas enumerate.  Its letters are floor(k(1-y)+x) - floor((k-1)(1-y)+x)
//    for k = 1..n, so every cell is a single convex polygon:
//        W_k <= k(1-y) + x < W_k + 1,  W_k = w_1 + ... + w_k.
//
// A word is attainable from the region [0,u) x [0,t] when its closed cell
// meets the region; the x < u side stays strict (half-open region), the
// y-sides are closed.  Feasibility is decided exactly by two-variable
// Fourier-Motzkin elimination with strict/non-strict bookkeeping.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "counting.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace balword {

// a*x + b*y <= c, or strict when `strict` is set.
struct linear_constraint {
    rational a;
    rational b;
    rational c;
    bool strict = false;
};

struct constraint_system {
    std::vector<linear_constraint> constraints;
};

// Which mechanical rounding labels the partition cells.  Tests certify the
// floor convention; the ceiling variant is kept for experimentation (the
// two partitions differ only on cell boundaries).
enum class coding_convention { lower_floor, upper_ceiling };

// Parameter region [0,u) x [0,t]: x-side half-open, y-side closed.
struct param_region {
    rational u;
    rational t;

    param_region(rational u_, rational t_) : u(std::move(u_)), t(std::move(t_)) {
        if (u <= 0 || u > 1) throw std::domain_error("region width u must lie in (0,1]");
        if (t <= 0 || t > 1) throw std::domain_error("region height t must lie in (0,1]");
    }

    std::vector<linear_constraint> constraints() const {
        return {
            {-1, 0, 0, false},  // x >= 0
            {1, 0, u, true},    // x < u
            {0, -1, 0, false},  // y >= 0
            {0, 1, t, false},   // y <= t
        };
    }
};

// Half-plane system whose solutions are exactly the points with
// coding(x, y, n) = w and floor((1-y) + x) = branch (floor convention);
// the ceiling variant flips the strict sides.  Branch is 0 or 1 for the
// floor convention, 0..2 for the ceiling one.
inline constraint_system parameter_system(const word& w, int branch,
                                          coding_convention conv = coding_convention::lower_floor) {
    if (w.empty()) throw std::domain_error("parameter_system needs a nonempty word");
    const int max_branch = conv == coding_convention::lower_floor ? 1 : 2;
    if (branch < 0 || branch > max_branch)
        throw std::domain_error("branch out of range for this convention");
    constraint_system sys;
    const std::uint64_t n = w.size();
    sys.constraints.reserve(2 * (n + 1) + 4);
    std::int64_t wsum = 0;  // W_{k-1}
    for (std::uint64_t k = 1; k <= n + 1; ++k) {
        const rational cst(branch + wsum);
        const rational kk(static_cast<std::int64_t>(k));
        if (conv == coding_convention::lower_floor) {
            // cst <= k(1-y) + x         ->  -x + k y <= k - cst
            // k(1-y) + x < cst + 1      ->   x - k y <  cst + 1 - k
            sys.constraints.push_back({-1, kk, kk - cst, false});
            sys.constraints.push_back({1, -kk, cst + 1 - kk, true});
        } else {
            // cst - 1 < k(1-y) + x      ->  -x + k y <  k - cst + 1
            // k(1-y) + x <= cst         ->   x - k y <= cst - k
            sys.constraints.push_back({-1, kk, kk - cst + 1, true});
            sys.constraints.push_back({1, -kk, cst - kk, false});
        }
        if (k <= n) wsum += w[k - 1];
    }
    // the unit-square domain 0 <= x < 1, 0 <= y <= 1
    sys.constraints.push_back({-1, 0, 0, false});
    sys.constraints.push_back({1, 0, 1, true});
    sys.constraints.push_back({0, -1, 0, false});
    sys.constraints.push_back({0, 1, 1, false});
    return sys;
}

// The convex partition cell of w: W_k <= k(1-y)+x < W_k + 1 for k = 1..n
// inside the unit square.  `closed` relaxes every strict side, giving the
// cell's closure (the ceiling-convention cell shifts the bounds by one
// instead: W_k - 1 <= k(1-y)+x <= W_k).
inline constraint_system partition_cell(const word& w, bool closed = false,
                                        coding_convention conv = coding_convention::lower_floor) {
    if (w.empty()) throw std::domain_error("partition_cell needs a nonempty word");
    constraint_system sys;
    const std::uint64_t n = w.size();
    sys.constraints.reserve(2 * n + 4);
    std::int64_t wsum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        wsum += w[k - 1];
        const rational kk(static_cast<std::int64_t>(k));
        const rational lo = conv == coding_convention::lower_floor ? rational(wsum)
                                                                   : rational(wsum - 1);
        // lo <= k(1-y) + x <= lo + 1, lower side strict for the ceiling cell,
        // upper side strict for the floor cell (unless closed)
        const bool lo_strict = !closed && conv == coding_convention::upper_ceiling;
        const bool hi_strict = !closed && conv == coding_convention::lower_floor;
        sys.constraints.push_back({-1, kk, kk - lo, lo_strict});
        sys.constraints.push_back({1, -kk, lo + 1 - kk, hi_strict});
    }
    sys.constraints.push_back({-1, 0, 0, false});
    sys.constraints.push_back({1, 0, 1, !closed});
    sys.constraints.push_back({0, -1, 0, false});
    sys.constraints.push_back({0, 1, 1, false});
    return sys;
}

namespace detail {

// Exact feasibility of a conjunction of half-planes over the rationals.
// Eliminates x first (pairing lower with upper bounds, strictness ORs),
// then intersects the resulting y-intervals.
inline bool feasible_constraints(const std::vector<linear_constraint>& cs) {
    struct ybound {
        rational b, c;  // b*y <= c (or <)
        bool strict;
    };
    struct xbound {
        rational b, c;  // x <= c + b*y (upper) or x >= c + b*y (lower)
        bool strict;
    };
    std::vector<ybound> ycs;
    std::vector<xbound> uppers, lowers;
    for (const auto& lc : cs) {
        if (lc.a == 0) {
            if (lc.b == 0) {
                if (lc.strict ? !(lc.c > 0) : !(lc.c >= 0)) return false;
            } else {
                ycs.push_back({lc.b, lc.c, lc.strict});
            }
            continue;
        }
        const rational bb = -lc.b / lc.a, cc = lc.c / lc.a;
        if (lc.a > 0)
            uppers.push_back({bb, cc, lc.strict});
        else
            lowers.push_back({bb, cc, lc.strict});
    }
    for (const auto& lo : lowers)
        for (const auto& up : uppers)
            // c_lo + b_lo y <= c_up + b_up y  ->  (b_lo - b_up) y <= c_up - c_lo
            ycs.push_back({lo.b - up.b, up.c - lo.c, lo.strict || up.strict});

    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    rational lo, hi;
    for (const auto& yc : ycs) {
        if (yc.b == 0) {
            if (yc.strict ? !(yc.c > 0) : !(yc.c >= 0)) return false;
            continue;
        }
        const rational v = yc.c / yc.b;
        if (yc.b > 0) {  // y <= v
            if (!has_hi || v < hi || (v == hi && yc.strict)) {
                hi = v;
                hi_strict = yc.strict;
                has_hi = true;
            }
        } else {  // y >= v
            if (!has_lo || v > lo || (v == lo && yc.strict)) {
                lo = v;
                lo_strict = yc.strict;
                has_lo = true;
            }
        }
    }
    if (has_lo && has_hi) {
        if (lo > hi) return false;
        if (lo == hi && (lo_strict || hi_strict)) return false;
    }
    return true;
}

}  // namespace detail

// True iff the system, intersected with the region, has a rational point.
inline bool feasible(const constraint_system& sys, const param_region& region) {
    std::vector<linear_constraint> all = sys.constraints;
    for (auto& rc : region.constraints()) all.push_back(std::move(rc));
    return detail::feasible_constraints(all);
}

// Exact point evaluation (handy for round-trip tests).
inline bool satisfies(const constraint_system& sys, const rational& x, const rational& y) {
    for (const auto& lc : sys.constraints) {
        const rational v = lc.a * x + lc.b * y;
        if (lc.strict ? !(v < lc.c) : !(v <= lc.c)) return false;
    }
    return true;
}

inline constexpr std::uint64_t oracle_length_limit = 16;

// Counts balanced words of length n attainable from the region: the word's
// closed partition cell must meet [0,u) x [0,t], with only the x < u side
// strict.  Contact through the closed edges y = 0, y = t, x = 0 counts;
// contact confined to x = u does not.
inline bigint count_B_oracle(std::uint64_t n, const param_region& region,
                             coding_convention conv = coding_convention::lower_floor,
                             std::uint64_t limit = oracle_length_limit) {
    if (n > limit)
        throw resource_error("oracle bound exceeded: n = " + std::to_string(n) + ", limit = " +
                             std::to_string(limit));
    const auto words = enumerate_balanced(n, limit);
    std::uint64_t count = 0;
    for (const auto& w : words) {
        auto sys = partition_cell(w, /*closed=*/true, conv);
        for (auto& rc : region.constraints()) sys.constraints.push_back(std::move(rc));
        if (detail::feasible_constraints(sys.constraints)) ++count;
    }
    return bigint(count);
}

// Exists-semantics count over the rectangle rho in (a,b], alpha in [c,d),
// paired with the inclusion-exclusion estimate assembled from four
// count_B_theorem evaluations (an O(n^2)-accurate stand-in, not an oracle).
struct rectangle_count {
    bigint count;
    double estimate = 0.0;
};

inline rectangle_count count_B_rectangle(std::uint64_t n, const rational& a, const rational& b,
                                         const rational& c, const rational& d,
                                         std::uint64_t limit = oracle_length_limit) {
    if (!(0 <= a && a < b && b <= 1) || !(0 <= c && c < d && d <= 1))
        throw std::domain_error("rectangle needs 0 <= a < b <= 1 and 0 <= c < d <= 1");
    if (n == 0) throw std::domain_error("n must be positive");
    if (n > limit)
        throw resource_error("oracle bound exceeded: n = " + std::to_string(n) + ", limit = " +
                             std::to_string(limit));
    // alpha in [c,d)  <->  y = 1 - alpha in (1-d, 1-c]
    const std::vector<linear_constraint> rect = {
        {-1, 0, -a, true},     // x > a
        {1, 0, b, false},      // x <= b
        {0, -1, d - 1, true},  // y > 1 - d
        {0, 1, 1 - c, false},  // y <= 1 - c
    };
    std::uint64_t count = 0;
    for (const auto& w : enumerate_balanced(n, limit)) {
        auto sys = partition_cell(w, /*closed=*/true);
        sys.constraints.insert(sys.constraints.end(), rect.begin(), rect.end());
        if (detail::feasible_constraints(sys.constraints)) ++count;
    }
    auto term = [&](const rational& t, const rational& u) -> bigint {
        if (t <= 0 || u <= 0) return 0;
        return count_B_theorem(n, threshold(t, u));
    };
    const bigint est = term(1 - c, b) - term(1 - c, a) - term(1 - d, b) + term(1 - d, a);
    return {bigint(count), est.convert_to<double>()};
}

namespace detail {

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

// Intersection points contributed by the order-m segments inside
// [0,u) x [0,t].  The segment x = m y - b meets x = l y - c at
//   y = (b-c)/(m-l),  x = (l b - m c)/(m-l),
// subject to b/m <= y < (b+1)/m, y <= t, x < u; taking l = 0, c = 0 covers
// the entry points on the left edge x = 0.  One dot per distinct y (the y
// value pins b and hence the point); their number is A(m,t,u).
inline std::vector<std::pair<rational, rational>> new_intersections(std::uint64_t m,
                                                                    const param_region& region) {
    std::set<rational> seen;
    std::vector<std::pair<rational, rational>> out;
    for (std::uint64_t ell = 0; ell < m; ++ell) {
        const std::uint64_t c_end = ell == 0 ? 1 : ell;
        for (std::uint64_t cc = 0; cc < c_end; ++cc)
            for (std::uint64_t bb = cc; bb < m; ++bb) {
                const bigint dden = bigint(m) - bigint(ell);
                const rational y(bigint(bb) - bigint(cc), dden);
                if (rational(bigint(bb), bigint(m)) > y) continue;
                if (y >= rational(bigint(bb) + 1, bigint(m))) continue;
                if (y > region.t) continue;
                const rational x(bigint(ell) * bb - bigint(m) * cc, dden);
                if (x >= region.u) continue;
                if (seen.insert(y).second) out.emplace_back(x, y);
            }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& p, const auto& q) { return p.second < q.second; });
    return out;
}

// Renders the unit square, all segments x = n y - l for n <= m (order-m
// ones dashed), the shaded region, and dots at the order-m intersection
// points.  600x600 viewport, y increasing upward, 3-digit coordinates.
inline std::string partition_svg(std::uint64_t m, const param_region& region) {
    if (m == 0) throw std::domain_error("m must be positive");
    if (m > 64) throw resource_error("partition rendering is limited to m <= 64");
    constexpr double side = 600.0;
    auto X = [&](double x) { return x * side; };
    auto Y = [&](double y) { return side - y * side; };
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
    // shaded parameter region [0,u) x [0,t]
    const double u = to_double(region.u), t = to_double(region.t);
    svg += "<rect x=\"0\" y=\"" + detail::svg_coord(Y(t)) + "\" width=\"" +
           detail::svg_coord(X(u)) + "\" height=\"" + detail::svg_coord(t * side) +
           "\" fill=\"#d7e3f4\"/>\n";
    for (std::uint64_t n = 1; n <= m; ++n) {
        const bool dashed = n == m && m > 1;
        for (std::uint64_t ell = 0; ell < n; ++ell) {
            // x = n y - ell crosses the square from (0, ell/n) to (1, (ell+1)/n)
            const double y0 = static_cast<double>(ell) / static_cast<double>(n);
            const double y1 = static_cast<double>(ell + 1) / static_cast<double>(n);
            svg += "<line x1=\"" + detail::svg_coord(X(0)) + "\" y1=\"" +
                   detail::svg_coord(Y(y0)) + "\" x2=\"" + detail::svg_coord(X(1)) + "\" y2=\"" +
                   detail::svg_coord(Y(y1)) + "\" stroke=\"" + (dashed ? "#444444" : "#999999") +
                   "\" stroke-width=\"1\"" + (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
        }
    }
    svg += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"2\"/>\n";
    for (const auto& [px, py] : new_intersections(m, region)) {
        svg += "<circle cx=\"" + detail::svg_coord(X(to_double(px))) + "\" cy=\"" +
               detail::svg_coord(Y(to_double(py))) + "\" r=\"3\" fill=\"#c0392b\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace balword

#pragma once

// Independent oracles used only by tests.  Each one recomputes a library
// quantity by a different route (brute force, telescoped algebra,
// quadrature, vertex enumeration) so the implementation path it checks is
// never exercised here.

#include <balword/balword.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace testing_support {

using namespace balword;

// All-pairs factor comparison, O(n^3): the definition taken literally.
inline bool balanced_all_pairs(const word& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i)
            for (std::size_t j = 0; j + len <= n; ++j) {
                std::int64_t a = 0, b = 0;
                for (std::size_t k = 0; k < len; ++k) {
                    a += w[i + k];
                    b += w[j + k];
                }
                if (a - b > 1 || b - a > 1) return false;
            }
    return true;
}

// phi(k) by the gcd definition.
inline std::uint64_t phi_by_gcd(std::uint64_t k) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++count;
    return count;
}

// mu(k) by trial-division factorization.
inline int mu_by_factoring(std::uint64_t k) {
    int primes = 0;
    for (std::uint64_t p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;
        ++primes;
    }
    if (k > 1) ++primes;
    return primes % 2 ? -1 : 1;
}

// sum_{b=1..B} floor(b p / q) by the direct loop.
inline bigint floor_sum_direct(std::uint64_t B, std::uint64_t p, std::uint64_t q) {
    bigint acc = 0;
    for (std::uint64_t b = 1; b <= B; ++b) acc += bigint(b * p / q);
    return acc;
}

// Franel integral via the telescoped closed form
//   Phi^2/3 - sum (2i-1) f_i + Phi * sum f_i^2,
// an algebraically different route from the per-gap antiderivatives.
inline rational franel_telescoped(std::uint64_t m) {
    const auto seq = farey_sequence::of_order(m);
    const bigint phi(seq.fractions.size());
    rational linear = 0, square = 0;
    for (std::size_t i = 0; i < seq.fractions.size(); ++i) {
        const rational f = seq.fractions[i].as_rational();
        linear += rational(bigint(2 * (i + 1) - 1)) * f;
        square += f * f;
    }
    return rational(phi * phi, 3) - linear + rational(phi) * square;
}

// Midpoint Riemann sum for the Franel integral, `points` samples.
inline double franel_quadrature(std::uint64_t m, std::uint64_t points = 1'000'000) {
    const auto seq = farey_sequence::of_order(m);
    std::vector<double> fs;
    fs.reserve(seq.fractions.size());
    for (const auto& f : seq.fractions)
        fs.push_back(static_cast<double>(f.num) / static_cast<double>(f.den));
    const double phi = static_cast<double>(fs.size());
    double acc = 0.0;
    std::size_t idx = 0;  // #fractions <= t so far (two-pointer walk)
    for (std::uint64_t g = 0; g < points; ++g) {
        const double tt = (static_cast<double>(g) + 0.5) / static_cast<double>(points);
        while (idx < fs.size() && fs[idx] <= tt) ++idx;
        const double dev = static_cast<double>(idx) - tt * phi;
        acc += dev * dev;
    }
    return acc / static_cast<double>(points);
}

// Exact 2-variable feasibility by vertex enumeration: collect all pairwise
// boundary intersections that satisfy the relaxed system; the relative
// interior of their hull (their centroid) decides the strict sides.
inline bool feasible_by_vertices(const std::vector<linear_constraint>& cs) {
    auto satisfies_relaxed = [&](const rational& x, const rational& y) {
        for (const auto& lc : cs)
            if (lc.a * x + lc.b * y > lc.c) return false;
        return true;
    };
    auto satisfies_exact = [&](const rational& x, const rational& y) {
        for (const auto& lc : cs) {
            const rational v = lc.a * x + lc.b * y;
            if (lc.strict ? !(v < lc.c) : !(v <= lc.c)) return false;
        }
        return true;
    };
    std::vector<std::pair<rational, rational>> verts;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const rational det = cs[i].a * cs[j].b - cs[j].a * cs[i].b;
            if (det == 0) continue;
            const rational x = (cs[i].c * cs[j].b - cs[j].c * cs[i].b) / det;
            const rational y = (cs[i].a * cs[j].c - cs[j].a * cs[i].c) / det;
            if (satisfies_relaxed(x, y)) verts.emplace_back(x, y);
        }
    if (verts.empty()) return false;
    rational cx = 0, cy = 0;
    for (const auto& [x, y] : verts) {
        cx += x;
        cy += y;
    }
    const rational k(bigint(verts.size()));
    return satisfies_exact(cx / k, cy / k);
}

}  // namespace testing_support

#pragma once

// Binary-word primitives: mechanical prefixes from exact rational slope and
// intercept, the balance test, exhaustive enumeration of balanced words, and
// the coding map that labels parameter points with words.
//
// A word is balanced when any two equal-length factors have 1-counts that
// differ by at most one.  Mechanical prefixes use
//     s_k = floor(alpha (k+1) + rho) - floor(alpha k + rho),   k = 1..n
// (ceilings for the upper variant), computed with exact rational floors.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "rational.hpp"

namespace balword {

// Finite sequence over {0,1}.  Letters pack into 64-bit blocks; words of
// length <= 64 stay in a single block, longer ones spill into more.
class word {
public:
    word() = default;

    static word from_string(std::string_view s) {
        word w;
        for (char ch : s) {
            if (ch != '0' && ch != '1') throw std::domain_error("word letters must be 0 or 1");
            w.push_back(ch - '0');
        }
        return w;
    }

    // Letter k (0-based) taken from bit k of `bits`; n <= 64.
    static word from_packed(std::uint64_t bits, std::size_t n) {
        word w;
        w.len_ = n;
        if (n > 0) w.blocks_.push_back(n < 64 ? (bits & ((std::uint64_t(1) << n) - 1)) : bits);
        return w;
    }

    void push_back(int letter) {
        if (letter != 0 && letter != 1) throw std::domain_error("word letters must be 0 or 1");
        const std::size_t block = len_ / 64, bit = len_ % 64;
        if (block == blocks_.size()) blocks_.push_back(0);
        if (letter) blocks_[block] |= std::uint64_t(1) << bit;
        ++len_;
    }

    int operator[](std::size_t i) const {
        return static_cast<int>((blocks_[i / 64] >> (i % 64)) & 1u);
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    std::uint64_t ones() const {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < len_; ++i) total += (*this)[i];
        return total;
    }

    std::string str() const {
        std::string s;
        s.reserve(len_);
        for (std::size_t i = 0; i < len_; ++i) s.push_back(char('0' + (*this)[i]));
        return s;
    }

    friend bool operator==(const word& a, const word& b) {
        return a.len_ == b.len_ && a.blocks_ == b.blocks_;
    }

    // Lexicographic by letters, shorter prefix first on ties.
    friend bool operator<(const word& a, const word& b) {
        const std::size_t n = a.len_ < b.len_ ? a.len_ : b.len_;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.len_ < b.len_;
    }

private:
    std::vector<std::uint64_t> blocks_;
    std::size_t len_ = 0;
};

// Slope in [0,1], intercept in [0,1).
struct mechanical_params {
    rational alpha;
    rational rho;
};

namespace detail {

inline void check_mechanical(const mechanical_params& p) {
    if (p.alpha < 0 || p.alpha > 1) throw std::domain_error("slope must lie in [0,1]");
    if (p.rho < 0 || p.rho >= 1) throw std::domain_error("intercept must lie in [0,1)");
}

enum class rounding { down, up };

inline word mechanical_prefix(const mechanical_params& p, std::uint64_t n, rounding mode) {
    check_mechanical(p);
    if (n == 0) throw std::domain_error("prefix length must be positive");
    // alpha k + rho = (a s k + r b) / (b s); letters are consecutive
    // differences of the rounded values at k = 1..n+1.
    const bigint a = numerator(p.alpha), b = denominator(p.alpha);
    const bigint r = numerator(p.rho), s = denominator(p.rho);
    const bigint bs = b * s, as = a * s, rb = r * b;
    auto rounded = [&](std::uint64_t k) {
        const bigint x = as * k + rb;
        return mode == rounding::down ? floor_div(x, bs) : -floor_div(-x, bs);
    };
    word w;
    bigint prev = rounded(1);
    for (std::uint64_t k = 2; k <= n + 1; ++k) {
        bigint cur = rounded(k);
        w.push_back((cur - prev).convert_to<int>());
        prev = cur;
    }
    return w;
}

}  // namespace detail

inline word lower_mechanical_prefix(const mechanical_params& p, std::uint64_t n) {
    return detail::mechanical_prefix(p, n, detail::rounding::down);
}

inline word upper_mechanical_prefix(const mechanical_params& p, std::uint64_t n) {
    return detail::mechanical_prefix(p, n, detail::rounding::up);
}

// Balance test via per-length window-sum extremes over prefix sums, O(n^2).
inline bool is_balanced(const word& w) {
    const std::size_t n = w.size();
    if (n < 2) return true;
    std::vector<std::uint32_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + std::uint32_t(w[i]);
    for (std::size_t len = 1; len < n; ++len) {
        std::uint32_t lo = prefix[len], hi = prefix[len];
        for (std::size_t i = 1; i + len <= n; ++i) {
            const std::uint32_t s = prefix[i + len] - prefix[i];
            lo = s < lo ? s : lo;
            hi = s > hi ? s : hi;
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

inline constexpr std::uint64_t default_enumeration_limit = 22;

// All balanced words of length n, in lexicographic order.  Extends balanced
// prefixes and re-checks only the windows that end at the fresh letter, so
// the search tree is the balanced set itself rather than all 2^n words.
inline std::vector<word> enumerate_balanced(std::uint64_t n,
                                            std::uint64_t limit = default_enumeration_limit) {
    if (n == 0) throw std::domain_error("word length must be positive");
    if (n > limit || n > 64)
        throw resource_error("enumeration bound exceeded: n = " + std::to_string(n) +
                             ", limit = " + std::to_string(limit < 64 ? limit : 64));
    std::vector<word> out;
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<std::uint32_t> prefix(nn + 1, 0);
    std::vector<std::uint32_t> wmin(nn + 1, 0), wmax(nn + 1, 0);
    // undo buffer per depth: deeper calls must not clobber this level's saves
    std::vector<std::vector<std::array<std::uint32_t, 2>>> saved(
        nn + 1, std::vector<std::array<std::uint32_t, 2>>(nn + 1));
    std::uint64_t bits = 0;

    auto rec = [&](auto&& self, std::size_t len) -> void {
        if (len == nn) {
            out.push_back(word::from_packed(bits, nn));
            return;
        }
        const std::size_t pos = len + 1;
        for (int letter = 0; letter <= 1; ++letter) {
            prefix[pos] = prefix[len] + std::uint32_t(letter);
            if (letter) bits |= std::uint64_t(1) << len;
            bool ok = true;
            std::size_t touched = 0;
            for (std::size_t ell = 1; ell <= pos; ++ell) {
                const std::uint32_t s = prefix[pos] - prefix[pos - ell];
                saved[pos][ell] = {wmin[ell], wmax[ell]};
                touched = ell;
                if (ell == pos) {
                    wmin[ell] = wmax[ell] = s;
                } else {
                    if (s < wmin[ell]) wmin[ell] = s;
                    if (s > wmax[ell]) wmax[ell] = s;
                }
                if (wmax[ell] - wmin[ell] > 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, pos);
            for (std::size_t ell = 1; ell <= touched; ++ell) {
                wmin[ell] = saved[pos][ell][0];
                wmax[ell] = saved[pos][ell][1];
            }
            if (letter) bits &= ~(std::uint64_t(1) << len);
        }
    };
    rec(rec, 0);
    return out;
}

// Cell label of the parameter point (x,y): the lower mechanical prefix of
// slope 1-y and intercept x.
inline word coding(const rational& x, const rational& y, std::uint64_t n) {
    if (x < 0 || x >= 1) throw std::domain_error("coding abscissa must lie in [0,1)");
    if (y < 0 || y > 1) throw std::domain_error("coding ordinate must lie in [0,1]");
    return lower_mechanical_prefix({rational(1) - y, x}, n);
}

}  // namespace balword

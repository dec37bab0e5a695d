#include <catch2/catch_amalgamated.hpp>

#include <balword/counting.hpp>
#include <balword/farey.hpp>
#include <balword/words.hpp>

#include <random>
#include <set>

#include "support/test_oracles.hpp"

using namespace balword;

namespace {

mechanical_params params(const char* alpha, const char* rho) {
    return {parse_rational(alpha), parse_rational(rho)};
}

}  // namespace

TEST_CASE("word basics") {
    const word w = word::from_string("01101");
    CHECK(w.size() == 5);
    CHECK(w.str() == "01101");
    CHECK(w.ones() == 3);
    CHECK(w == word::from_packed(0b10110, 5));
    CHECK(word::from_string("01") < word::from_string("10"));
    CHECK(word::from_string("0") < word::from_string("00"));
    CHECK_THROWS_AS(word::from_string("012"), std::domain_error);

    word long_word;
    for (int i = 0; i < 130; ++i) long_word.push_back(i % 3 == 0);
    CHECK(long_word.size() == 130);
    CHECK(long_word[0] == 1);
    CHECK(long_word[128] == 0);
    CHECK(long_word[129] == 1);
    CHECK(long_word[126] == 1);
}

TEST_CASE("lower mechanical prefixes") {
    CHECK(lower_mechanical_prefix(params("0", "0"), 4).str() == "0000");
    CHECK(lower_mechanical_prefix(params("1", "0"), 4).str() == "1111");
    CHECK(lower_mechanical_prefix(params("1/2", "0"), 4).str() == "1010");

    CHECK_THROWS_AS(lower_mechanical_prefix(params("3/2", "0"), 3), std::domain_error);
    CHECK_THROWS_AS(lower_mechanical_prefix(params("1/2", "1"), 3), std::domain_error);
    CHECK_THROWS_AS(lower_mechanical_prefix(params("1/2", "0"), 0), std::domain_error);
}

TEST_CASE("upper mechanical prefixes") {
    CHECK(upper_mechanical_prefix(params("0", "0"), 3).str() == "000");
    CHECK(upper_mechanical_prefix(params("1/2", "0"), 4).str() == "0101");
}

TEST_CASE("lower and upper prefixes coincide away from integer hits") {
    // alpha = 2/5, rho = 1/3: alpha k + rho = (6k+5)/15 is never an integer
    const auto p = params("2/5", "1/3");
    for (std::uint64_t k = 1; k <= 11; ++k)
        REQUIRE(denominator(frac_part(p.alpha * k + p.rho)) != 1);
    CHECK(lower_mechanical_prefix(p, 10) == upper_mechanical_prefix(p, 10));
}

TEST_CASE("prefixes coincide exactly off the integer set") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 150; ++trial) {
        const std::uint64_t aq = 1 + rng() % 30, ap = rng() % (aq + 1);
        const std::uint64_t rq = 1 + rng() % 30, rp = rng() % rq;
        const mechanical_params p{rational(bigint(ap), bigint(aq)),
                                  rational(bigint(rp), bigint(rq))};
        const std::uint64_t n = 1 + rng() % 20;
        bool integer_hit = false;
        for (std::uint64_t k = 1; k <= n + 1; ++k)
            if (frac_part(p.alpha * k + p.rho) == 0) integer_hit = true;
        if (!integer_hit)
            CHECK(lower_mechanical_prefix(p, n) == upper_mechanical_prefix(p, n));
    }
}

TEST_CASE("balance test") {
    CHECK_FALSE(is_balanced(word::from_string("0011")));
    CHECK(is_balanced(word::from_string("0101")));
    CHECK(is_balanced(word::from_string("")));
    CHECK(is_balanced(word::from_string("1")));
    CHECK_FALSE(is_balanced(word::from_string("1100")));
    CHECK(is_balanced(word::from_string("0100101001")));
}

TEST_CASE("balance test agrees with the all-pairs definition up to length 12") {
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
            const word w = word::from_packed(bits, n);
            REQUIRE(is_balanced(w) == testing_support::balanced_all_pairs(w));
        }
}

TEST_CASE("mechanical prefixes are balanced") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t aq = 1 + rng() % 40, ap = rng() % (aq + 1);
        const std::uint64_t rq = 1 + rng() % 40, rp = rng() % rq;
        const mechanical_params p{rational(bigint(ap), bigint(aq)),
                                  rational(bigint(rp), bigint(rq))};
        const std::uint64_t n = 1 + rng() % 40;
        CHECK(is_balanced(lower_mechanical_prefix(p, n)));
        CHECK(is_balanced(upper_mechanical_prefix(p, n)));
    }
}

TEST_CASE("enumeration of balanced words") {
    const auto one = enumerate_balanced(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].str() == "0");
    CHECK(one[1].str() == "1");

    CHECK(enumerate_balanced(3).size() == 8);

    const auto four = enumerate_balanced(4);
    REQUIRE(four.size() == 14);
    std::set<std::string> labels;
    for (const auto& w : four) labels.insert(w.str());
    CHECK(labels.size() == 14);
    CHECK_FALSE(labels.count("0011"));
    CHECK_FALSE(labels.count("1100"));

    CHECK_THROWS_AS(enumerate_balanced(0), std::domain_error);
    CHECK_THROWS_AS(enumerate_balanced(23), resource_error);
    CHECK_NOTHROW(enumerate_balanced(5, 5));
    CHECK_THROWS_AS(enumerate_balanced(6, 5), resource_error);
}

TEST_CASE("enumeration is sorted, balanced, and complete") {
    for (std::uint64_t n = 1; n <= 11; ++n) {
        const auto words = enumerate_balanced(n);
        std::uint64_t brute = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits)
            if (is_balanced(word::from_packed(bits, n))) ++brute;
        REQUIRE(words.size() == brute);
        for (std::size_t i = 0; i + 1 < words.size(); ++i) REQUIRE(words[i] < words[i + 1]);
        for (const auto& w : words) REQUIRE(is_balanced(w));
    }
}

TEST_CASE("enumeration size matches the totient formula") {
    const auto tables = build_sieve(16);
    for (std::uint64_t n = 1; n <= 15; ++n) {
        bigint expect = 1;
        for (std::uint64_t k = 1; k <= n; ++k) expect += bigint(n + 1 - k) * tables.phi[k];
        CHECK(bigint(enumerate_balanced(n).size()) == expect);
    }
}

TEST_CASE("prefixes of balanced words are balanced") {
    for (const auto& w : enumerate_balanced(10)) {
        word prefix;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            prefix.push_back(w[i]);
            REQUIRE(is_balanced(prefix));
        }
    }
}

TEST_CASE("coding map") {
    CHECK(coding(rational(0), rational(0), 3).str() == "111");
    CHECK(coding(rational(0), rational(1), 3).str() == "000");
    CHECK(coding(rational(1, 3), rational(1, 2), 4) ==
          lower_mechanical_prefix(params("1/2", "1/3"), 4));
    CHECK_THROWS_AS(coding(rational(1), rational(0), 3), std::domain_error);
    CHECK_THROWS_AS(coding(rational(0), rational(2), 3), std::domain_error);
}

#include <catch2/catch_amalgamated.hpp>

#include <balword/farey.hpp>

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "support/test_oracles.hpp"

using namespace balword;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("7/10") == rational(7, 10));
    CHECK(parse_rational("0.59") == rational(59, 100));
    CHECK(parse_rational("1") == rational(1));
    CHECK(parse_rational("12.5") == rational(25, 2));
    CHECK(parse_rational("-3/4") == rational(-3, 4));
    CHECK(parse_rational(".25") == rational(1, 4));
    CHECK_THROWS_AS(parse_rational("0.5.9"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), std::domain_error);
    CHECK_THROWS_AS(parse_rational(""), std::domain_error);
    CHECK(to_string(rational(7, 10)) == "7/10");
    CHECK(to_string(rational(4)) == "4");
    CHECK(to_string(rational(-1, 3)) == "-1/3");
}

TEST_CASE("floor, ceil, fractional part") {
    CHECK(floor_of(rational(7, 2)) == 3);
    CHECK(floor_of(rational(-7, 2)) == -4);
    CHECK(ceil_of(rational(7, 2)) == 4);
    CHECK(frac_part(rational(2)) == rational(0));
    CHECK(frac_part(rational(3, 2)) == rational(1, 2));
    CHECK(frac_part(rational(8, 3)) == rational(2, 3));
    CHECK(frac_part(rational(-1, 3)) == rational(2, 3));
}

TEST_CASE("totient sieve") {
    const auto t = build_sieve(300);
    CHECK(t.phi[1] == 1);
    CHECK(t.phi[12] == 4);
    CHECK(t.phi[7] == 6);
    for (std::uint64_t k = 1; k <= 300; ++k)
        REQUIRE(t.phi[k] == testing_support::phi_by_gcd(k));
    CHECK_THROWS_AS(build_sieve(0), std::domain_error);
}

TEST_CASE("moebius sieve") {
    const auto t = mobius_sieve(300);
    CHECK(t.mu[1] == 1);
    CHECK(t.mu[4] == 0);
    CHECK(t.mu[6] == 1);
    for (std::uint64_t k = 1; k <= 300; ++k)
        REQUIRE(int(t.mu[k]) == testing_support::mu_by_factoring(k));
    // sum_{d|k} mu(d) = [k = 1]
    for (std::uint64_t k = 1; k <= 200; ++k) {
        int s = 0;
        for (std::uint64_t d = 1; d <= k; ++d)
            if (k % d == 0) s += t.mu[d];
        REQUIRE(s == (k == 1 ? 1 : 0));
    }
}

TEST_CASE("summatory totient") {
    CHECK(totient_summatory(1) == 1);
    CHECK(totient_summatory(4) == 6);
    CHECK(totient_summatory(3) == bigint(farey_sequence::of_order(3).fractions.size()));
}

TEST_CASE("farey sequences") {
    const auto f1 = farey_sequence::of_order(1);
    REQUIRE(f1.fractions.size() == 1);
    CHECK(f1.fractions[0] == farey_fraction{0, 1});

    const auto f3 = farey_sequence::of_order(3);
    REQUIRE(f3.fractions.size() == 4);
    CHECK(f3.fractions[1] == farey_fraction{1, 3});
    CHECK(f3.fractions[2] == farey_fraction{1, 2});
    CHECK(f3.fractions[3] == farey_fraction{2, 3});

    CHECK(farey_sequence::of_order(5).fractions.size() == 10);
    CHECK_THROWS_AS(farey_sequence::of_order(0), std::domain_error);
    CHECK_THROWS_AS(farey_sequence::of_order(9000), resource_error);
}

TEST_CASE("farey invariants up to order 300") {
    const auto tables = build_sieve(300);
    const auto phi_prefix = totient_prefix(tables);
    for (std::uint64_t m = 1; m <= 300; ++m) {
        const auto f = farey_sequence::of_order(m);
        REQUIRE(f.fractions.size() == phi_prefix[m]);
        REQUIRE(f.fractions.front() == farey_fraction{0, 1});
        for (const auto& fr : f.fractions) {
            REQUIRE(fr.den <= m);
            REQUIRE(std::gcd(fr.num, fr.den) == 1);
            REQUIRE(fr.num < fr.den);
        }
        for (std::size_t i = 0; i + 1 < f.fractions.size(); ++i) {
            const auto &a = f.fractions[i], &b = f.fractions[i + 1];
            // adjacency: b.num * a.den - a.num * b.den = 1 (also forces sortedness)
            REQUIRE(b.num * a.den - a.num * b.den == 1);
        }
    }
}

TEST_CASE("mertens function") {
    CHECK(mertens(1) == 1);
    CHECK(mertens(2) == 0);
    CHECK(mertens(3) == -1);
    const auto t = build_sieve(300);
    std::int64_t acc = 0;
    for (std::uint64_t m = 1; m <= 300; ++m) {
        acc += testing_support::mu_by_factoring(m);
        REQUIRE(mertens(m, t) == acc);
    }
}

TEST_CASE("summatory totient stays within the fitted n log n band") {
    std::ifstream in(std::string(BALWORD_FIXTURES_DIR) + "/calibration.json");
    REQUIRE(in.good());
    const auto fixtures = nlohmann::json::parse(in);
    const double cap = fixtures.at("phi_error_C").get<double>() * 1.10;
    const auto tables = build_sieve(100'000);
    std::uint64_t phi_sum = tables.phi[1];
    for (std::uint64_t m = 2; m <= 100'000; ++m) {
        phi_sum += tables.phi[m];
        const double md = double(m);
        const double err = std::fabs(double(phi_sum) - 3.0 * md * md / (pi_value * pi_value));
        REQUIRE(err <= cap * md * std::log(md + 2.0));
    }
}

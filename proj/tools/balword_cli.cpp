// Command-line front end: exact counts, cross-method verification, scan and
// diagnostic CSV exports, and partition figures.
//
// Thresholds are parsed exactly: "0.59" means 59/100 (never a binary float),
// and "7/10" is accepted as well.  Exit codes: 0 success, 2 bad arguments or
// domain errors, 3 resource-bound violations, 4 verification failure.

#include <CLI11.hpp>
#include <balword/balword.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace balword;

threshold make_threshold(const std::string& t, const std::string& u) {
    return threshold(parse_rational(t), parse_rational(u));
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

int run_count(std::uint64_t n, const std::string& t, const std::string& u,
              const std::string& method) {
    const threshold th = make_threshold(t, u);
    bigint result;
    if (method == "fast") {
        result = count_B_fast(n, th);
    } else if (method == "theorem") {
        result = count_B_theorem(n, th);
    } else if (method == "classic") {
        if (th.t != 1 || th.u != 1)
            throw std::domain_error("--method classic requires --t 1 --u 1");
        result = count_B_classic(n);
    } else if (method == "oracle") {
        result = count_B_oracle(n, param_region(th.u, th.t));
    } else {
        throw std::domain_error("unknown method: " + method);
    }
    std::cout << result.str() << "\n";
    return 0;
}

int run_verify(std::uint64_t n_max) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) all_ok = false;
    };

    const auto tables = build_sieve(n_max + 1);
    const auto phi_prefix = totient_prefix(tables);

    // theorem == classic == 1 + sum Phi, every n <= n_max
    {
        const auto a_table = detail::theorem_A_table(n_max, threshold(1, 1));
        bool ok = true;
        uint128 running = 1, phi_cum = 0;
        for (std::uint64_t n = 1; n <= n_max && ok; ++n) {
            running += a_table[n];
            phi_cum += phi_prefix[n];
            const bigint theorem_b = from_uint128(running);
            ok = theorem_b == count_B_classic(n, tables) &&
                 theorem_b == bigint(1) + from_uint128(phi_cum);
        }
        report("theorem == classic == 1 + sum Phi       (n <= " + std::to_string(n_max) + ")",
               ok);
    }

    // brute-force enumeration == classic
    {
        const std::uint64_t cap = std::min<std::uint64_t>(n_max, 14);
        bool ok = true;
        for (std::uint64_t n = 1; n <= cap && ok; ++n)
            ok = bigint(enumerate_balanced(n).size()) == count_B_classic(n, tables);
        report("enumeration == classic                  (n <= " + std::to_string(cap) + ")", ok);
    }

    // fast == theorem across thresholds
    {
        const threshold grid[] = {threshold(1, 1), threshold(rational(1, 2), rational(1, 3)),
                                  threshold(rational(7, 10), rational(59, 100)),
                                  threshold(rational(1, 7), rational(3, 5))};
        bool ok = true;
        for (std::uint64_t n = 1; n <= n_max && ok; ++n)
            for (const auto& th : grid) {
                if (count_B_fast(n, th) != count_B_theorem(n, th)) {
                    ok = false;
                    break;
                }
            }
        report("fast == theorem on threshold grid       (n <= " + std::to_string(n_max) + ")",
               ok);
    }

    // oracle == theorem (geometry cross-check)
    {
        const std::uint64_t cap = std::min<std::uint64_t>(n_max, 10);
        const threshold grid[] = {threshold(1, 1), threshold(rational(7, 10), rational(59, 100)),
                                  threshold(rational(1, 2), rational(1, 3))};
        bool ok = true;
        for (std::uint64_t n = 1; n <= cap && ok; ++n)
            for (const auto& th : grid) {
                if (count_B_oracle(n, param_region(th.u, th.t)) != count_B_theorem(n, th)) {
                    ok = false;
                    break;
                }
            }
        report("oracle == theorem                       (n <= " + std::to_string(cap) + ")", ok);
    }

    // A(m,1,1) == Phi(m)
    {
        const std::uint64_t cap = std::min<std::uint64_t>(n_max, 120);
        bool ok = true;
        for (std::uint64_t m = 1; m <= cap && ok; ++m)
            ok = count_A_naive(m, threshold(1, 1)) == bigint(phi_prefix[m]);
        report("A(m,1,1) == Phi(m)                      (m <= " + std::to_string(cap) + ")", ok);
    }

    // Moebius floor-sum path == naive
    {
        const std::uint64_t cap = std::min<std::uint64_t>(n_max, 100);
        const rational ts[] = {rational(1, 2), rational(7, 10)};
        bool ok = true;
        for (std::uint64_t m = 1; m <= cap && ok; ++m)
            for (const auto& t : ts)
                if (count_A_fast_u1(m, t, tables) != count_A_naive(m, threshold(t, 1))) {
                    ok = false;
                    break;
                }
        report("count_A_fast_u1 == count_A_naive        (m <= " + std::to_string(cap) + ")", ok);
    }

    return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting of balanced binary words in a slope/intercept rectangle"};
    app.require_subcommand(1);

    std::uint64_t n = 1, m = 1, n_max = 10, m_max = 50, k_max = 10;
    std::string t = "1", u = "1", method = "fast", out, format = "csv";

    auto* count_cmd = app.add_subcommand("count", "print one exact count B(n,t,u)");
    count_cmd->add_option("--n", n, "word length")->required();
    count_cmd->add_option("--t", t, "slope threshold (exact decimal or p/q)");
    count_cmd->add_option("--u", u, "intercept threshold (exact decimal or p/q)");
    count_cmd->add_option("--method", method, "fast|theorem|classic|oracle")
        ->check(CLI::IsMember({"fast", "theorem", "classic", "oracle"}));

    auto* scan_cmd = app.add_subcommand("scan", "emit the per-m count table");
    scan_cmd->add_option("--n-max", n_max, "scan bound")->required();
    scan_cmd->add_option("--t", t, "slope threshold");
    scan_cmd->add_option("--u", u, "intercept threshold");
    scan_cmd->add_option("--out", out, "output path (stdout when omitted)");
    scan_cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the cross-method identity suite");
    verify_cmd->add_option("--n-max", n_max, "suite bound");

    auto* farey_cmd = app.add_subcommand("farey", "emit a Farey sequence as CSV");
    farey_cmd->add_option("--m", m, "order")->required();
    farey_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* franel_cmd = app.add_subcommand("franel", "emit exact Franel integrals as CSV");
    franel_cmd->add_option("--m-max", m_max, "largest order")->required();
    franel_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* expsum_cmd = app.add_subcommand("expsum",
                                          "emit Farey exponential sums vs Mertens as CSV");
    expsum_cmd->add_option("--m-max", m_max, "largest order")->required();
    expsum_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* gcdsum_cmd = app.add_subcommand("gcdsum", "emit dyadic gcd box sums as CSV");
    gcdsum_cmd->add_option("--k-max", k_max, "largest k for H = M = 2^k")->required();
    gcdsum_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* errors_cmd = app.add_subcommand("errors", "emit B(n,1,1) error terms as CSV");
    errors_cmd->add_option("--n-max", n_max, "largest n")->required();
    errors_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* partition_cmd = app.add_subcommand("partition", "render the parameter partition as SVG");
    partition_cmd->add_option("--m", m, "partition order (<= 64)")->required();
    partition_cmd->add_option("--t", t, "region height");
    partition_cmd->add_option("--u", u, "region width");
    partition_cmd->add_option("--out", out, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (count_cmd->parsed()) return run_count(n, t, u, method);
        if (scan_cmd->parsed()) {
            const auto table = balword::scan(n_max, make_threshold(t, u));
            emit(out, format == "json" ? balword::to_json(table).dump(2) + "\n"
                                       : balword::to_csv(table));
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(n_max);
        if (farey_cmd->parsed()) {
            emit(out, balword::to_csv(balword::farey_sequence::of_order(m)));
            return 0;
        }
        if (franel_cmd->parsed()) {
            std::vector<std::pair<std::uint64_t, balword::rational>> rows;
            for (std::uint64_t i = 1; i <= m_max; ++i)
                rows.emplace_back(i, balword::franel_integral(i));
            emit(out, balword::franel_csv(rows));
            return 0;
        }
        if (expsum_cmd->parsed()) {
            emit(out, balword::expsum_csv(balword::farey_exponential_scan(m_max)));
            return 0;
        }
        if (gcdsum_cmd->parsed()) {
            std::vector<std::pair<std::uint64_t, balword::error_report>> rows;
            for (std::uint64_t k = 1; k <= k_max; ++k) {
                const std::uint64_t h = std::uint64_t(1) << k;
                rows.emplace_back(k, balword::gcd_box_sum(h, h).second);
            }
            emit(out, balword::gcdsum_csv(rows));
            return 0;
        }
        if (errors_cmd->parsed()) {
            emit(out, balword::error_reports_csv(balword::error_B11_scan(n_max)));
            return 0;
        }
        if (partition_cmd->parsed()) {
            balword::write_file(out, balword::partition_svg(
                                         m, balword::param_region(balword::parse_rational(u),
                                                                  balword::parse_rational(t))));
            return 0;
        }
    } catch (const balword::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

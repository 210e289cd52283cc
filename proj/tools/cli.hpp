#pragma once

// Command-line front end. Kept in a header so tests can drive run_cli()
// in-process with string streams.
//
// Exit codes: 0 verdict computed, 2 usage or parse error, 3 NOT_APPLICABLE,
// 4 internal guard exceeded.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ryser/ryser.hpp"
#include "ryser/report_json.hpp"

namespace ryser::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kNotApplicable = 3,
    kGuard = 4,
};

inline constexpr u64 kMaxInput = (u64{1} << 63) - 1;

/// Strict decimal parse into [1, 2^63). No sign, no whitespace.
inline std::optional<u64> parse_positive(std::string_view s) {
    if (s.empty()) return std::nullopt;
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0 || v > kMaxInput) return std::nullopt;
    return v;
}

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        if (!enabled_) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string join(const std::vector<u64>& xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s.push_back(sep);
        s += std::to_string(xs[i]);
    }
    return s;
}

inline std::string csv_line(const CriterionReport& r) {
    std::string witnesses;
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        const auto& w = r.witnesses[i];
        if (i) witnesses.push_back(';');
        witnesses += std::to_string(w.p) + ":" + std::to_string(w.m) + ":" + std::to_string(w.order);
    }
    return std::to_string(r.u()) + "," + std::to_string(r.n) + "," + std::string(to_string(r.verdict)) + "," +
           join(r.rejection_primes, ';') + "," + witnesses;
}

inline std::size_t sieve_cap_from_env() {
    const char* raw = std::getenv("RYSER_SIEVE_CAP");
    if (raw == nullptr) return kDefaultSieveCap;
    auto v = parse_positive(raw);
    if (!v) throw CLI::ValidationError("RYSER_SIEVE_CAP", "must be a positive integer");
    return static_cast<std::size_t>(*v);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Screen candidate orders of circulant Hadamard matrices with the odd-order criterion", "ryser"};
    app.require_subcommand(1);

    bool timing = false;
    app.add_flag("--timing", timing, "Fill timing_ms with wall-clock time (default 0 for byte-stable output)");

    std::string check_n;
    auto* check = app.add_subcommand("check", "Apply the criterion to one order n");
    check->add_option("n", check_n, "Order n, 1 <= n < 2^63")->required();

    std::string sieve_lo, sieve_hi, sieve_format = "json-lines";
    unsigned sieve_threads = 0;
    auto* sieve_cmd = app.add_subcommand("sieve", "Apply the criterion to n = 4u^2 for odd u in [u_min, u_max]");
    sieve_cmd->add_option("u_min", sieve_lo, "Smallest odd u")->required();
    sieve_cmd->add_option("u_max", sieve_hi, "Largest odd u")->required();
    sieve_cmd->add_option("--format", sieve_format, "Output format")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    sieve_cmd->add_option("--threads", sieve_threads, "Worker count (0 = all cores)");

    std::string row_literal;
    auto* verify = app.add_subcommand("verify-row", "Check one circulant first row given as a +/- literal");
    verify->add_option("row", row_literal, "Row literal, e.g. +++-")->required();

    std::string search_kind;
    std::size_t search_size = 0;
    unsigned search_threads = 0;
    auto* search = app.add_subcommand("search", "Exhaustive search for circulant Hadamard rows or Barker sequences");
    search->add_option("kind", search_kind, "circulant or barker")
        ->required()
        ->check(CLI::IsMember({"circulant", "barker"}));
    search->add_option("size", search_size, "Order (circulant, <= 28) or length (barker, <= 24)")->required();
    search->add_option("--threads", search_threads, "Worker count (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const Stopwatch clock(timing);

    try {
        if (*check) {
            auto n = parse_positive(check_n);
            if (!n) {
                err << "error: n must be a positive integer below 2^63, got \"" << check_n << "\"\n";
                return kUsage;
            }
            const CriterionReport report = evaluate(*n);
            out << envelope("check", {{"n", *n}}, report, clock.elapsed_ms()).dump() << "\n";
            return report.verdict == Verdict::not_applicable ? kNotApplicable : kOk;
        }

        if (*sieve_cmd) {
            auto lo = parse_positive(sieve_lo);
            auto hi = parse_positive(sieve_hi);
            if (!lo || !hi) {
                err << "error: sieve bounds must be positive integers\n";
                return kUsage;
            }
            SieveOptions opts;
            opts.cap = sieve_cap_from_env();
            opts.threads = sieve_threads;
            detail::validate_sieve_range(*lo, *hi, opts.cap);

            const bool csv = sieve_format == "csv";
            std::map<std::string, u64> counts{{"NOT_DECIDED", 0}, {"REJECTED", 0}};
            std::vector<u64> survivors;
            if (csv) out << "u,n,verdict,rejection_primes,witnesses\n";
            sieve_stream(*lo, *hi, opts, [&](const CriterionReport& r) {
                ++counts[std::string(to_string(r.verdict))];
                if (r.verdict == Verdict::not_decided) survivors.push_back(r.u());
                if (csv) {
                    out << csv_line(r) << "\n";
                } else {
                    nlohmann::json rec = r;
                    rec["type"] = "record";
                    out << rec.dump() << "\n";
                }
            });
            if (csv) {
                out << "# summary: REJECTED=" << counts["REJECTED"] << ",NOT_DECIDED=" << counts["NOT_DECIDED"]
                    << ",survivors=" << join(survivors, ';') << "\n";
            } else {
                nlohmann::json summary = {{"type", "summary"},
                                          {"schema_version", kSchemaVersion},
                                          {"command", "sieve"},
                                          {"input", {{"u_min", *lo}, {"u_max", *hi}}},
                                          {"counts", counts},
                                          {"survivors", survivors},
                                          {"timing_ms", clock.elapsed_ms()}};
                out << summary.dump() << "\n";
            }
            return kOk;
        }

        if (*verify) {
            const SignRow row = SignRow::from_literal(row_literal);
            const SpectrumReport spec = spectrum(row);
            nlohmann::json result = {{"row", row.literal()},
                                     {"n", row.size()},
                                     {"hadamard", is_circulant_hadamard(row)},
                                     {"spectral_hadamard", spectrally_hadamard(spec)},
                                     {"paf", periodic_autocorrelations(row)},
                                     {"spectrum", spec}};
            out << envelope("verify-row", {{"row", row_literal}}, result, clock.elapsed_ms()).dump() << "\n";
            return kOk;
        }

        if (*search) {
            const std::vector<SignRow> rows = search_kind == "circulant" ? search_all(search_size, search_threads)
                                                                         : search_barker(search_size, search_threads);
            for (const auto& r : rows) out << r.literal() << "\n";
            out << "count " << rows.size() << "\n";
            return kOk;
        }
    } catch (const range_too_large& e) {
        err << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        // Search size outside its guard is reported as a usage error.
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace ryser::cli

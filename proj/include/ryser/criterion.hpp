#pragma once

/**
 * @file criterion.hpp
 * @brief Odd-order rejection criterion for circulant Hadamard orders.
 *
 * A candidate order is n = 4u^2 with u odd, i.e. n = 2^2 p_2^{2a_2} ... p_t^{2a_t}.
 * For every prime p_j | n put m_j = n / p_j^{2a_j}. If a circulant Hadamard
 * matrix of order n exists then ord_{m_j}(p_j) is odd for every j, so a single
 * even order rejects n. Survivors are undecided, never confirmed.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ryser/arith.hpp"
#include "ryser/parallel.hpp"

namespace ryser {

/// Largest odd u with 4u^2 < 2^63.
inline constexpr u64 kMaxCandidateRoot = 1'518'500'249;

inline constexpr std::size_t kDefaultSieveCap = 10'000'000;

enum class NotCandidateReason {
    not_divisible_by_4,
    quotient_not_square,
    square_root_even,
};

inline std::string_view to_string(NotCandidateReason r) noexcept {
    switch (r) {
        case NotCandidateReason::not_divisible_by_4: return "not divisible by 4";
        case NotCandidateReason::quotient_not_square: return "n/4 is not a perfect square";
        case NotCandidateReason::square_root_even: return "square root of n/4 is even";
    }
    return "unknown";
}

class not_candidate_form : public std::invalid_argument {
public:
    not_candidate_form(u64 n, NotCandidateReason reason)
        : std::invalid_argument(std::to_string(n) + " is not of the form 4u^2 with u odd: " +
                                std::string(to_string(reason))),
          n_(n), reason_(reason) {}

    u64 n() const noexcept { return n_; }
    NotCandidateReason reason() const noexcept { return reason_; }

private:
    u64 n_;
    NotCandidateReason reason_;
};

class range_too_large : public std::length_error {
public:
    range_too_large(std::size_t count, std::size_t cap)
        : std::length_error("sieve range has " + std::to_string(count) +
                            " entries, cap is " + std::to_string(cap)) {}
};

/// n = 4 u^2 with u odd, together with the factorization of u.
struct CandidateOrder {
    u64 n = 4;
    u64 u = 1;
    Factorization u_factors;

    /// Factorization of n itself: 2^2 times u_factors squared.
    Factorization n_factors() const { return Factorization({{2, 2}}).times(u_factors.pow(2)); }
};

enum class Parity { odd, even };

inline std::string_view to_string(Parity p) noexcept { return p == Parity::odd ? "odd" : "even"; }

struct WitnessRecord {
    u64 p = 2;
    unsigned a = 1;      // p^{2a} exactly divides n
    u64 m = 1;           // n / p^{2a}
    u64 order = 1;       // ord_m(p)
    Parity parity = Parity::odd;
    u64 j_index = 1;     // 1 + (p^{2a} mod n): eigenvalue index with w_n^{j-1} = w_m

    friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

enum class Verdict { rejected, not_decided, not_applicable };

inline std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::rejected: return "REJECTED";
        case Verdict::not_decided: return "NOT_DECIDED";
        case Verdict::not_applicable: return "NOT_APPLICABLE";
    }
    return "UNKNOWN";
}

struct CriterionReport {
    u64 n = 0;
    bool applicable = false;
    std::vector<WitnessRecord> witnesses;
    Verdict verdict = Verdict::not_applicable;
    std::vector<u64> rejection_primes;
    std::optional<NotCandidateReason> not_applicable_reason;

    /// The odd part u when applicable.
    u64 u() const noexcept {
        if (!applicable) return 0;
        u64 u = 1;
        for (const auto& w : witnesses) {
            if (w.p == 2) continue;
            for (unsigned i = 0; i < w.a; ++i) u *= w.p;
        }
        return u;
    }
};

namespace detail {

// Integer square root, exact for all 64-bit inputs.
inline u64 isqrt(u64 x) noexcept {
    u64 lo = 0, hi = std::min<u64>(x, 0xFFFF'FFFFULL) + 1;
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        if (mid * mid <= x) lo = mid;
        else hi = mid;
    }
    return lo;
}

inline std::optional<NotCandidateReason> candidate_defect(u64 n) noexcept {
    if (n == 0 || n % 4 != 0) return NotCandidateReason::not_divisible_by_4;
    const u64 q = n / 4;
    const u64 r = isqrt(q);
    if (r * r != q) return NotCandidateReason::quotient_not_square;
    if (r % 2 == 0) return NotCandidateReason::square_root_even;
    return std::nullopt;
}

}  // namespace detail

inline CandidateOrder candidate_from_root(u64 u) {
    if (u == 0 || u % 2 == 0 || u > kMaxCandidateRoot) {
        throw std::invalid_argument("candidate root must be odd and in [1, " +
                                    std::to_string(kMaxCandidateRoot) + "]");
    }
    return CandidateOrder{4 * u * u, u, factorize(u)};
}

/// Decompose n as 4u^2, u odd. Throws not_candidate_form otherwise.
inline CandidateOrder parse_candidate(u64 n) {
    if (auto defect = detail::candidate_defect(n)) throw not_candidate_form(n, *defect);
    return candidate_from_root(detail::isqrt(n / 4));
}

inline bool is_candidate_form(u64 n) noexcept { return !detail::candidate_defect(n).has_value(); }

/// One witness per distinct prime of n, ascending by prime.
inline CriterionReport theorem_witnesses(const CandidateOrder& c) {
    CriterionReport report;
    report.n = c.n;
    report.applicable = true;

    const Factorization n_factors = c.n_factors();
    for (const auto& [p, e2] : n_factors) {
        WitnessRecord w;
        w.p = p;
        w.a = e2 / 2;
        u64 block = 1;
        for (unsigned i = 0; i < e2; ++i) block *= p;
        w.m = c.n / block;

        std::vector<PrimePower> rest;
        for (const auto& f : n_factors) {
            if (f.prime != p) rest.push_back(f);
        }
        w.order = multiplicative_order(p, w.m, Factorization(std::move(rest)));
        w.parity = (w.order % 2 == 0) ? Parity::even : Parity::odd;
        w.j_index = 1 + block % c.n;
        if (w.parity == Parity::even) report.rejection_primes.push_back(p);
        report.witnesses.push_back(w);
    }
    report.verdict = report.rejection_primes.empty() ? Verdict::not_decided : Verdict::rejected;
    return report;
}

/// Criterion report for any n; orders outside the 4u^2 shape are NOT_APPLICABLE.
inline CriterionReport evaluate(u64 n) {
    if (auto defect = detail::candidate_defect(n)) {
        CriterionReport report;
        report.n = n;
        report.not_applicable_reason = defect;
        return report;
    }
    return theorem_witnesses(parse_candidate(n));
}

/**
 * Primes p with p | n, p not dividing n1, and ord_{n1}(p) even.
 *
 * Each one obstructs writing n = |a|^2 with a in the n1-th cyclotomic field,
 * as the obstruction lemma is usually quoted. That wording drops hypotheses
 * of the original result (45 = |6+3i|^2 is flagged at (45, 4)), so read the
 * output as "obstruction per the lemma as stated".
 */
inline std::vector<u64> brock_check(u64 n, u64 n1) {
    std::vector<u64> out;
    if (n == 0 || n1 == 0) throw std::invalid_argument("brock_check requires n >= 1 and n1 >= 1");
    const Factorization n1_factors = factorize(n1);
    for (u64 p : factorize(n).primes()) {
        if (n1 % p == 0) continue;
        if (multiplicative_order(p, n1, n1_factors) % 2 == 0) out.push_back(p);
    }
    return out;
}

struct SieveOptions {
    std::size_t cap = kDefaultSieveCap;
    unsigned threads = 1;
    /// Reports per scheduling block; bounds memory held before emission.
    std::size_t block = 4096;
};

namespace detail {

inline std::size_t validate_sieve_range(u64 u_min, u64 u_max, std::size_t cap) {
    if (u_min < 1 || u_min % 2 == 0 || u_max % 2 == 0 || u_min > u_max) {
        throw std::invalid_argument("sieve bounds must be odd with 1 <= u_min <= u_max");
    }
    if (u_max > kMaxCandidateRoot) {
        throw std::invalid_argument("u_max too large: 4u^2 must stay below 2^63");
    }
    const u64 count = (u_max - u_min) / 2 + 1;
    if (count > cap) throw range_too_large(count, cap);
    return count;
}

}  // namespace detail

/**
 * Evaluate n = 4u^2 for every odd u in [u_min, u_max], handing each report to
 * `sink` in ascending u. Work inside a block is spread over `threads`
 * workers; emission order never depends on scheduling.
 */
inline void sieve_stream(u64 u_min, u64 u_max, const SieveOptions& opts,
                         const std::function<void(const CriterionReport&)>& sink) {
    const std::size_t count = detail::validate_sieve_range(u_min, u_max, opts.cap);
    const std::size_t block = std::max<std::size_t>(opts.block, 1);
    std::vector<CriterionReport> buffer;
    for (std::size_t start = 0; start < count; start += block) {
        const std::size_t len = std::min(block, count - start);
        buffer.assign(len, {});
        parallel_for(len, opts.threads, [&](std::size_t i) {
            buffer[i] = theorem_witnesses(candidate_from_root(u_min + 2 * (start + i)));
        });
        for (const auto& r : buffer) sink(r);
    }
}

inline std::vector<CriterionReport> sieve(u64 u_min, u64 u_max, const SieveOptions& opts = {}) {
    std::vector<CriterionReport> out;
    sieve_stream(u_min, u_max, opts, [&](const CriterionReport& r) { out.push_back(r); });
    return out;
}

}  // namespace ryser

#pragma once

/**
 * @file barker.hpp
 * @brief Barker sequences: aperiodic autocorrelation, verification and
 * exhaustive search, plus the criterion report read as a Barker exclusion.
 *
 * A Barker sequence of even length L yields a circulant Hadamard matrix of
 * order L (a classical reduction, quoted here and not re-derived), so a
 * rejected order L also rules out Barker sequences of length L.
 */

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "ryser/circulant.hpp"
#include "ryser/criterion.hpp"
#include "ryser/sign_row.hpp"

namespace ryser {

using BarkerCandidate = SignRow;

inline constexpr std::size_t kMaxBarkerSearch = 24;

class length_too_large : public std::out_of_range {
public:
    length_too_large(std::size_t L, std::size_t limit)
        : std::out_of_range("Barker search length " + std::to_string(L) + " outside [1, " +
                            std::to_string(limit) + "]") {}
};

/// c_k = sum_{i=1..L-k} h_i h_{i+k}.
inline long aperiodic_autocorrelation(const BarkerCandidate& seq, std::size_t k) {
    const std::size_t L = seq.size();
    if (k >= L) throw index_out_of_range(k, L);
    long acc = 0;
    for (std::size_t i = 0; i + k < L; ++i) acc += seq[i] * seq[i + k];
    return acc;
}

inline bool is_barker(const BarkerCandidate& seq) {
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (std::labs(aperiodic_autocorrelation(seq, k)) > 1) return false;
    }
    return !seq.empty();
}

namespace detail {

inline bool mask_is_barker(std::uint64_t mask, std::size_t L) noexcept {
    for (std::size_t k = 1; k < L; ++k) {
        const std::size_t overlap = L - k;
        const int differ = std::popcount((mask ^ (mask >> k)) & low_bits(overlap));
        const long c = static_cast<long>(overlap) - 2L * differ;
        if (c > 1 || c < -1) return false;
    }
    return true;
}

}  // namespace detail

/// All Barker sequences of length L (1 <= L <= 24), lexicographic.
inline std::vector<BarkerCandidate> search_barker(std::size_t L, unsigned threads = 1) {
    if (L < 1 || L > kMaxBarkerSearch) throw length_too_large(L, kMaxBarkerSearch);
    return detail::exhaustive_masks(L, threads, [L](std::uint64_t mask) { return detail::mask_is_barker(mask, L); });
}

struct BarkerExclusionReport {
    CriterionReport criterion;
    /// True when the criterion rejects order L, hence no Barker sequence of length L.
    bool excludes_barker = false;
    std::string note;
};

/// Criterion report for n = L, annotated with its Barker reading. Requires L even and L > 4.
inline BarkerExclusionReport barker_exclusion_report(u64 L) {
    if (L % 2 != 0 || L <= 4) throw std::invalid_argument("Barker exclusion needs an even length L > 4");
    BarkerExclusionReport out;
    out.criterion = evaluate(L);
    out.excludes_barker = out.criterion.verdict == Verdict::rejected;
    switch (out.criterion.verdict) {
        case Verdict::rejected:
            out.note = "order " + std::to_string(L) +
                       " rejected; by the classical Barker to circulant Hadamard reduction, "
                       "no Barker sequence of this length exists";
            break;
        case Verdict::not_decided:
            out.note = "criterion does not decide order " + std::to_string(L) + "; no Barker conclusion";
            break;
        case Verdict::not_applicable:
            out.note = "length " + std::to_string(L) + " is not of the form 4u^2 with u odd; criterion not applicable";
            break;
    }
    return out;
}

}  // namespace ryser

#pragma once

/**
 * @file circulant.hpp
 * @brief Circulant Hadamard verification: exact autocorrelation test, the
 * eigenvalue spectrum, coefficient grouping over cyclotomic subfields and an
 * exhaustive search for small orders.
 *
 * H = circ(h_1, ..., h_n) has eigenvalues b_s = R(w_n^{s-1}), s = 1..n, where
 * R(x) = h_1 + h_2 x + ... + h_n x^{n-1} and w_n = exp(2 i pi / n). H is
 * Hadamard iff |b_s| = sqrt(n) for all s, which is equivalent to every
 * off-peak periodic autocorrelation being zero. The integer form decides;
 * the spectrum is a cross-check.
 */

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "ryser/parallel.hpp"
#include "ryser/sign_row.hpp"

namespace ryser {

inline constexpr std::size_t kMaxCirculantSearch = 28;

/// Relative tolerance for all floating comparisons, scaled by sqrt(n).
inline constexpr double kSpectralTolerance = 1e-9;

class order_too_large : public std::out_of_range {
public:
    order_too_large(std::size_t n, std::size_t limit)
        : std::out_of_range("search size " + std::to_string(n) + " outside [1, " +
                            std::to_string(limit) + "]") {}
};

class not_a_divisor : public std::invalid_argument {
public:
    not_a_divisor(std::size_t d, std::size_t n)
        : std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(n)) {}
};

struct SpectrumReport {
    std::vector<std::complex<double>> eigenvalues;  // b_s, s = 1..n
    std::vector<double> magnitudes;
    double max_deviation = 0.0;                     // max_s | |b_s| - sqrt(n) |
    static constexpr const char* root_convention = "w_n = exp(2*i*pi/n), b_s = R(w_n^(s-1))";
};

/// sum_i h_i h_{i+k}, indices cyclic.
inline long periodic_autocorrelation(const SignRow& row, std::size_t k) {
    const std::size_t n = row.size();
    if (k >= n) throw index_out_of_range(k, n);
    long acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += row[i] * row[(i + k) % n];
    return acc;
}

inline std::vector<long> periodic_autocorrelations(const SignRow& row) {
    std::vector<long> out(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) out[k] = periodic_autocorrelation(row, k);
    return out;
}

inline bool is_circulant_hadamard(const SignRow& row) {
    for (std::size_t k = 1; k < row.size(); ++k) {
        if (periodic_autocorrelation(row, k) != 0) return false;
    }
    return !row.empty();
}

/// exp(2 i pi num / den) with num reduced mod den first.
inline std::complex<double> root_of_unity(std::uint64_t num, std::uint64_t den) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

/// Direct O(n^2) evaluation of the representer polynomial at every n-th root of unity.
inline SpectrumReport spectrum(const SignRow& row) {
    const std::size_t n = row.size();
    SpectrumReport rep;
    rep.eigenvalues.reserve(n);
    rep.magnitudes.reserve(n);
    const double target = std::sqrt(static_cast<double>(n));
    for (std::size_t s = 0; s < n; ++s) {
        std::complex<double> b{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) b += static_cast<double>(row[i]) * root_of_unity(i * s, n);
        rep.eigenvalues.push_back(b);
        rep.magnitudes.push_back(std::abs(b));
        rep.max_deviation = std::max(rep.max_deviation, std::abs(std::abs(b) - target));
    }
    return rep;
}

inline bool spectrally_hadamard(const SpectrumReport& rep) {
    const double n = static_cast<double>(rep.eigenvalues.size());
    return rep.max_deviation <= kSpectralTolerance * std::sqrt(n);
}

/**
 * c_r = sum of h_{i+1} over i = r (mod n1), r = 0..n1-1.
 *
 * Then sum_r c_r w_{n1}^r = R(w_{n1}) = R(w_n^{n/n1}), the eigenvalue b_j with
 * j - 1 = n/n1, written with integer coefficients in the n1-th cyclotomic field.
 */
inline std::vector<long> group_coefficients(const SignRow& row, std::size_t n1) {
    const std::size_t n = row.size();
    if (n1 == 0 || n % n1 != 0) throw not_a_divisor(n1, n);
    std::vector<long> c(n1, 0);
    for (std::size_t i = 0; i < n; ++i) c[i % n1] += row[i];
    return c;
}

namespace detail {

inline std::uint64_t low_bits(std::size_t n) noexcept {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Entry i of the result is entry (i + k) mod n of the mask.
inline std::uint64_t rotate_mask(std::uint64_t mask, std::size_t k, std::size_t n) noexcept {
    if (k == 0) return mask;
    return ((mask >> k) | (mask << (n - k))) & low_bits(n);
}

inline bool mask_is_circulant_hadamard(std::uint64_t mask, std::size_t n) noexcept {
    // PAF_k = PAF_{n-k}, so half the shifts suffice.
    for (std::size_t k = 1; k <= n / 2; ++k) {
        const int disagreements = std::popcount(mask ^ rotate_mask(mask, k, n));
        if (static_cast<int>(n) != 2 * disagreements) return false;
    }
    return true;
}

// Visit every mask in [0, 2^n) that satisfies `accept`, spread over workers,
// then return the matching rows in lexicographic order.
template <typename Accept>
std::vector<SignRow> exhaustive_masks(std::size_t n, unsigned threads, Accept&& accept) {
    constexpr unsigned kChunkBits = 16;
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << kChunkBits);
    const std::size_t chunks = static_cast<std::size_t>(total / chunk);

    std::vector<std::vector<std::uint64_t>> found(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::uint64_t lo = c * chunk;
        for (std::uint64_t mask = lo; mask < lo + chunk; ++mask) {
            if (accept(mask)) found[c].push_back(mask);
        }
    });

    std::vector<SignRow> rows;
    for (const auto& part : found) {
        for (auto mask : part) rows.push_back(SignRow::from_mask(mask, n));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace detail

/**
 * Every first row of a circulant Hadamard matrix of order n (1 <= n <= 28),
 * in lexicographic order with + before -. Masks whose row sum squared is not
 * n are skipped: b_1 = R(1) is the row sum and must have modulus sqrt(n).
 */
inline std::vector<SignRow> search_all(std::size_t n, unsigned threads = 1) {
    if (n < 1 || n > kMaxCirculantSearch) throw order_too_large(n, kMaxCirculantSearch);
    const long nn = static_cast<long>(n);
    return detail::exhaustive_masks(n, threads, [n, nn](std::uint64_t mask) {
        const long row_sum = nn - 2L * std::popcount(mask);
        if (row_sum * row_sum != nn) return false;
        return detail::mask_is_circulant_hadamard(mask, n);
    });
}

}  // namespace ryser

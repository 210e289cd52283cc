#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the library's arithmetic: orders come from naive power
// iteration, factorizations from plain trial division.

#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 naive_mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exp mod m by exp repeated multiplications.
inline u64 naive_pow(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    for (u64 i = 0; i < exp; ++i) r = naive_mul_mod(r, base % m, m);
    return r;
}

/// Smallest k >= 1 with p^k = 1 mod m by stepping through powers; 0 if none
/// within m steps (p not a unit). Order mod 1 is 1.
inline u64 naive_order(u64 p, u64 m) {
    if (m == 1) return 1;
    u64 x = 1;
    for (u64 k = 1; k <= m; ++k) {
        x = naive_mul_mod(x, p % m, m);
        if (x == 1) return k;
    }
    return 0;
}

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool naive_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Verdict by brute force: every prime p | n = 4u^2, order of p mod n/p^{2a}
/// by iteration. Returns the primes with even order.
inline std::vector<u64> brute_rejection_primes(u64 u) {
    const u64 n = 4 * u * u;
    std::vector<u64> even;
    for (auto [p, e] : trial_factor(n)) {
        u64 block = 1;
        for (unsigned i = 0; i < e; ++i) block *= p;
        if (naive_order(p, n / block) % 2 == 0) even.push_back(p);
    }
    return even;
}

/// sum_i row[i] * w^{i*s}, with w = exp(2 i pi / n), via std::polar.
inline std::complex<double> dft_at(const std::vector<int>& row, std::size_t s) {
    const std::size_t n = row.size();
    std::complex<double> acc{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        acc += static_cast<double>(row[i]) *
               std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((i * s) % n) / static_cast<double>(n));
    }
    return acc;
}

}  // namespace oracle

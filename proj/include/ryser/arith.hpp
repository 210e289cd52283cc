#pragma once

/**
 * @file arith.hpp
 * @brief Exact 64-bit integer arithmetic: factorization, modular powers,
 * Euler's totient and multiplicative orders.
 *
 * Everything here works on std::uint64_t with inputs below 2^63. Products
 * are formed in unsigned __int128 so no intermediate ever overflows. There is
 * no floating point in this header: the parity of an order is only as
 * trustworthy as the integer arithmetic underneath it.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ryser {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Raised when an order modulo m is requested for a base sharing a factor with m.
class not_coprime : public std::domain_error {
public:
    not_coprime(u64 base, u64 modulus)
        : std::domain_error("order undefined: gcd(" + std::to_string(base) + ", " +
                            std::to_string(modulus) + ") != 1"),
          base_(base), modulus_(modulus) {}

    u64 base() const noexcept { return base_; }
    u64 modulus() const noexcept { return modulus_; }

private:
    u64 base_;
    u64 modulus_;
};

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. The empty list is 1.
class Factorization {
public:
    Factorization() = default;

    /// Builds from arbitrary (prime, exponent) pairs; merges duplicates and sorts.
    /// Primality of the entries is the caller's responsibility.
    explicit Factorization(std::vector<PrimePower> factors) {
        std::map<u64, unsigned> merged;
        for (const auto& f : factors) {
            if (f.exponent != 0) merged[f.prime] += f.exponent;
        }
        factors_.reserve(merged.size());
        for (const auto& [p, e] : merged) factors_.push_back({p, e});
    }

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }
    auto begin() const noexcept { return factors_.begin(); }
    auto end() const noexcept { return factors_.end(); }

    /// Product of prime^exponent. Caller guarantees it fits in 64 bits.
    u64 value() const noexcept {
        u64 v = 1;
        for (const auto& [p, e] : factors_) {
            for (unsigned i = 0; i < e; ++i) v *= p;
        }
        return v;
    }

    unsigned exponent_of(u64 p) const noexcept {
        for (const auto& f : factors_) {
            if (f.prime == p) return f.exponent;
        }
        return 0;
    }

    std::vector<u64> primes() const {
        std::vector<u64> out;
        out.reserve(factors_.size());
        for (const auto& f : factors_) out.push_back(f.prime);
        return out;
    }

    /// Factorization of this * other.
    Factorization times(const Factorization& other) const {
        std::vector<PrimePower> all = factors_;
        all.insert(all.end(), other.factors_.begin(), other.factors_.end());
        return Factorization(std::move(all));
    }

    /// Every exponent multiplied by k (the factorization of value()^k).
    Factorization pow(unsigned k) const {
        Factorization out = *this;
        for (auto& f : out.factors_) f.exponent *= k;
        return out;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

constexpr u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// base^exp mod modulus by square-and-multiply. mod_pow(x, 0, 1) == 0.
constexpr u64 mod_pow(u64 base, u64 exp, u64 modulus) noexcept {
    u64 result = 1 % modulus;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

namespace detail {

inline bool miller_rabin_round(u64 n, u64 a, u64 d, unsigned r) noexcept {
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline constexpr u64 kTrialLimit = 1'000'000;

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n; the generator is seeded so results are reproducible.
inline u64 pollard_brent(u64 n, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(1, n - 1);
    for (;;) {
        u64 y = dist(rng);
        const u64 c = dist(rng);
        const u64 batch = 128;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += batch;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split_cofactor(u64 n, std::vector<PrimePower>& out, std::mt19937_64& rng);

}  // namespace detail

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is sufficient for every n < 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (!detail::miller_rabin_round(n, a, d, r)) return false;
    }
    return true;
}

namespace detail {

inline void split_cofactor(u64 n, std::vector<PrimePower>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    const u64 d = pollard_brent(n, rng);
    split_cofactor(d, out, rng);
    split_cofactor(n / d, out, rng);
}

}  // namespace detail

/**
 * Factor n (1 <= n < 2^63).
 *
 * Trial division by 2, 3 and 6k +- 1 up to 10^6; whatever is left is either
 * prime or has all prime factors above 10^6, and is split with a seeded
 * Pollard-Brent rho.
 */
inline Factorization factorize(u64 n) {
    std::vector<PrimePower> out;
    if (n <= 1) return {};

    auto strip = [&](u64 d) {
        if (n % d != 0) return;
        unsigned e = 0;
        do {
            n /= d;
            ++e;
        } while (n % d == 0);
        out.push_back({d, e});
    };

    strip(2);
    strip(3);
    for (u64 d = 5; d <= detail::kTrialLimit && d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) {
        if (is_prime(n)) {
            out.push_back({n, 1});
        } else {
            std::mt19937_64 rng(0x5eedc14cULL ^ n);
            detail::split_cofactor(n, out, rng);
        }
    }
    return Factorization(std::move(out));
}

/// Euler's totient of the factored integer.
inline u64 euler_phi(const Factorization& f) noexcept {
    u64 phi = 1;
    for (const auto& [p, e] : f) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

/// Factorization of phi(m) assembled from the factorization of m, without
/// ever factoring phi(m) as a single number.
inline Factorization euler_phi_factorization(const Factorization& f) {
    Factorization out;
    for (const auto& [p, e] : f) {
        if (e > 1) out = out.times(Factorization({{p, e - 1}}));
        out = out.times(factorize(p - 1));
    }
    return out;
}

/**
 * Smallest k >= 1 with p^k = 1 (mod m), given the factorization of m.
 *
 * Starts from e = phi(m) and divides out each prime q of e while p^(e/q)
 * still reduces to 1. The order modulo 1 is 1.
 */
inline u64 multiplicative_order(u64 p, u64 m, const Factorization& m_factors) {
    if (m == 1) return 1;
    if (std::gcd(p % m, m) != 1) throw not_coprime(p, m);

    const Factorization phi = euler_phi_factorization(m_factors);
    u64 order = euler_phi(m_factors);
    for (const auto& [q, e] : phi) {
        for (unsigned i = 0; i < e; ++i) {
            if (mod_pow(p, order / q, m) != 1) break;
            order /= q;
        }
    }
    return order;
}

inline u64 multiplicative_order(u64 p, u64 m) {
    if (m == 1) return 1;
    return multiplicative_order(p, m, factorize(m));
}

}  // namespace ryser

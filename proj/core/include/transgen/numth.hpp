#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace transgen {

// Exact prime factorization, primes strictly increasing, exponents >= 1.
// The empty list represents 1.
class Factorization {
public:
    struct Entry {
        std::uint64_t prime;
        unsigned exponent;
        bool operator==(const Entry&) const = default;
    };

    Factorization() = default;
    // Entries must already be sorted by prime with no duplicates; checked.
    explicit Factorization(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    // Reassembled value, exact.
    mpz_class value() const;

    // Exponent of p in the represented integer (0 if p does not divide it).
    unsigned exponent_of(std::uint64_t p) const;

    // p-part n_p = p^{n(p)} as an exact integer.
    mpz_class p_part(std::uint64_t p) const;

    // Largest prime-power divisor; lpp(1) = 1 by the empty-max convention.
    mpz_class lpp() const;

    // omega = sum r_i, omega1 = sum r_i p_i, bigK = omega1 - omega.
    std::uint64_t omega() const;
    std::uint64_t omega1() const;
    std::uint64_t bigK() const;

    // Quotient by the p-part, as a factorization.
    Factorization without_prime(std::uint64_t p) const;

    // Multiply by p^k, keeping entries sorted.
    Factorization times_prime_power(std::uint64_t p, unsigned k) const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<Entry> entries_;
};

// Trial division over a sieved prime table, then deterministic Miller-Rabin
// on the remaining cofactor (with a deterministic Pollard rho ladder for the
// rare two-large-prime cofactors). Exact for all 64-bit inputs. Rejects n = 0.
Factorization factorize(std::uint64_t n);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// n_p for n >= 1 and p prime; throws std::invalid_argument if p is not prime.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// Largest prime-power divisor of n >= 1; lpp(1) = 1.
std::uint64_t lpp(std::uint64_t n);

std::uint64_t omega(std::uint64_t n);
std::uint64_t omega1(std::uint64_t n);
std::uint64_t bigK(std::uint64_t n);

// Exact binomial coefficient, 0 when k > n.
mpz_class binom(std::uint64_t n, std::uint64_t k);

// ws(n) = (n / 2^K) * C(K, floor(K/2)) as an exact rational, n >= 2.
mpq_class ws(const Factorization& f);
mpq_class ws(std::uint64_t n);

// Smallest-prime-factor lookup for n <= sieve bound (used by the bulk scans).
// Returns 0 if n is out of the sieved range.
std::uint64_t smallest_prime_factor(std::uint64_t n);

// lpp over the sieved range, O(log n) per call after the first.
std::uint64_t lpp_sieved(std::uint64_t n);

}  // namespace transgen

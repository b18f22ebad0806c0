#pragma once

#include <cstdint>
#include <vector>

// Exact 64-bit integer arithmetic: modular powers, deterministic primality,
// factorization, totients and multiplicative orders.
namespace qrcft {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Factors sorted ascending by prime, exponents >= 1.
struct PrimeFactorization {
    std::vector<PrimePower> factors;

    // Product of prime^exponent; 1 for the empty factorization.
    std::uint64_t value() const;
};

// Least nonnegative residue of a modulo m (m >= 1).
std::int64_t mod(std::int64_t a, std::int64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exp mod m, result in [0, m). Throws invalid_argument when m < 2.
std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m);

// Inverse of a modulo m. Throws not_coprime when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Exact for every 64-bit input (Miller-Rabin with the first twelve prime bases).
bool is_prime(std::uint64_t n);

PrimeFactorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Least k >= 1 with a^k = 1 mod m.
std::uint64_t mult_order(std::int64_t a, std::int64_t m);

bool is_squarefree(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

// Sieve of Eratosthenes; ascending primes <= limit.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

} // namespace qrcft

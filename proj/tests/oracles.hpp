#pragma once

// Test-only reference computations. None of these call into the library;
// they are deliberately naive so they can check it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<bool> sieve(std::int64_t n)
{
    std::vector<bool> prime(static_cast<std::size_t>(n) + 1, true);
    prime[0] = false;
    if (n >= 1)
        prime[1] = false;
    for (std::int64_t i = 2; i * i <= n; ++i)
        if (prime[i])
            for (std::int64_t j = i * i; j <= n; j += i)
                prime[j] = false;
    return prime;
}

inline bool trial_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline std::int64_t md(std::int64_t a, std::int64_t m)
{
    return ((a % m) + m) % m;
}

inline std::uint64_t phi_by_count(std::uint64_t n)
{
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
            ++c;
    return c;
}

inline std::uint64_t order_by_iteration(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = md(a, m);
    std::int64_t x = r;
    std::uint64_t k = 1;
    while (x != 1 % m) {
        x = x * r % m;
        ++k;
    }
    return k;
}

// Legendre symbol by listing squares.
inline int legendre(std::int64_t a, std::int64_t p)
{
    const std::int64_t r = md(a, p);
    if (r == 0)
        return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == r)
            return 1;
    return -1;
}

// Kronecker symbol (d/n) from the factorization of n and square listing,
// using the stated conventions at 2, -1 and 0.
inline int kronecker(std::int64_t d, std::int64_t n)
{
    if (n == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        if (d < 0)
            result = -1;
        n = -n;
    }
    for (const auto& [p, e] : trial_factor(static_cast<std::uint64_t>(n))) {
        int chi = 0;
        if (p == 2) {
            const std::int64_t r = md(d, 8);
            chi = (d % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
        } else {
            chi = legendre(d, static_cast<std::int64_t>(p));
        }
        for (unsigned i = 0; i < e; ++i)
            result *= chi;
    }
    return result;
}

// Fundamental discriminant test straight from the definition.
inline bool fundamental(std::int64_t d)
{
    auto squarefree = [](std::int64_t v) {
        v = v < 0 ? -v : v;
        for (std::int64_t k = 2; k * k <= v; ++k)
            if (v % (k * k) == 0)
                return false;
        return v != 0;
    };
    if (d == 0 || d == 1)
        return false;
    if (md(d, 4) == 1)
        return squarefree(d);
    if (md(d, 4) == 0) {
        const std::int64_t m = d / 4;
        return (md(m, 4) == 2 || md(m, 4) == 3) && squarefree(m);
    }
    return false;
}

// Smallest modulus (f, inf) with f in 1..|d| (any f, not only divisors)
// such that chi_d is constant on the classes a mod f (a = +-b mod f without
// the real place) of positive integers coprime to d. Scanning a up to
// lcm(|d|, f) meets every pair of residues mod |d| and mod f.
// Order: f ascending, finite before infinite.
inline std::pair<std::int64_t, bool> conductor_search(std::int64_t d)
{
    const std::int64_t n = d < 0 ? -d : d;
    for (std::int64_t f = 1; f <= n; ++f)
        for (const bool inf : {false, true}) {
            std::vector<int> seen(static_cast<std::size_t>(f), 0);
            bool ok = true;
            for (std::int64_t a = 1; ok && a <= std::lcm(n, f); ++a) {
                if (std::gcd(a, n) != 1)
                    continue;
                std::int64_t key = a % f;
                if (!inf)
                    key = std::min(key, (f - key) % f);
                int& v = seen[static_cast<std::size_t>(key)];
                const int chi = kronecker(d, a);
                if (v == 0)
                    v = chi;
                else if (v != chi)
                    ok = false;
            }
            if (ok)
                return {f, inf};
        }
    return {0, false};
}

} // namespace oracle

#include "qrcft/arith.hpp"

#include "qrcft/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>
#include <utility>
#include <string>

namespace qrcft {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_coprime: return "not-coprime";
    case Errc::internal_error: return "internal-error";
    case Errc::invalid_half_system: return "invalid-half-system";
    case Errc::too_large: return "too-large";
    case Errc::invalid_homomorphism: return "invalid-homomorphism";
    case Errc::invalid_discriminant: return "invalid-discriminant";
    case Errc::ramified: return "ramified";
    case Errc::ramified_unsupported: return "ramified-unsupported";
    case Errc::not_in_takagi_group: return "not-in-takagi-group";
    case Errc::witness_not_found: return "witness-not-found";
    }
    return "unknown";
}

std::uint64_t PrimeFactorization::value() const
{
    std::uint64_t v = 1;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            v *= p;
    return v;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

namespace {

std::uint64_t pow_mod_u(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s)
{
    std::uint64_t x = pow_mod_u(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t pollard_brent(std::uint64_t n)
{
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

} // namespace

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m)
{
    if (m < 2)
        fail(Errc::invalid_argument, "modulus must be at least 2, got " + std::to_string(m));
    const auto um = static_cast<std::uint64_t>(m);
    return static_cast<std::int64_t>(pow_mod_u(static_cast<std::uint64_t>(mod(base, m)), exp, um));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    if (m < 1)
        fail(Errc::invalid_argument, "modulus must be positive");
    if (m == 1)
        return 0;
    __int128 old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1)
        fail(Errc::not_coprime, std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    return mod(static_cast<std::int64_t>(old_s % m), m);
}

bool is_prime(std::uint64_t n)
{
    static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (const auto p : kBases) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    return std::none_of(kBases.begin(), kBases.end(),
                        [&](std::uint64_t a) { return miller_rabin_witness(n, a, d, s); });
}

PrimeFactorization factorize(std::uint64_t n)
{
    if (n == 0)
        fail(Errc::invalid_argument, "cannot factorize 0");
    PrimeFactorization result;
    for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        result.factors.push_back({p, e});
    }
    if (n > 1) {
        std::vector<std::uint64_t> large;
        split_large(n, large);
        std::sort(large.begin(), large.end());
        for (const auto p : large) {
            if (!result.factors.empty() && result.factors.back().prime == p)
                ++result.factors.back().exponent;
            else
                result.factors.push_back({p, 1});
        }
    }
    return result;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n).factors)
        phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t mult_order(std::int64_t a, std::int64_t m)
{
    if (m < 2)
        fail(Errc::invalid_argument, "modulus must be at least 2");
    const std::int64_t r = mod(a, m);
    if (std::gcd(r, m) != 1)
        fail(Errc::not_coprime, std::to_string(a) + " is not coprime to " + std::to_string(m));
    std::uint64_t order = euler_phi(static_cast<std::uint64_t>(m));
    for (const auto& [q, e] : factorize(order).factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (mod_pow(r, order / q, m) != 1)
                break;
            order /= q;
        }
    }
    return order;
}

bool is_squarefree(std::uint64_t n)
{
    if (n == 0)
        return false;
    const auto f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t existing = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit)
{
    std::vector<std::int64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

} // namespace qrcft

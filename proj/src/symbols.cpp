#include "qrcft/symbols.hpp"

#include "qrcft/arith.hpp"
#include "qrcft/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace qrcft {

namespace {

void require_odd_prime(std::int64_t p)
{
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        fail(Errc::invalid_argument, "n must be an odd prime, got " + std::to_string(p));
}

int jacobi_u(std::uint64_t a, std::uint64_t n)
{
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::uint64_t abs_u(std::int64_t v)
{
    return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

} // namespace

HalfSystem HalfSystem::make(std::int64_t p, std::vector<std::int64_t> elements)
{
    require_odd_prime(p);
    const auto half = static_cast<std::size_t>((p - 1) / 2);
    if (elements.size() != half)
        fail(Errc::invalid_half_system, "half-system mod " + std::to_string(p) + " needs " + std::to_string(half) +
                                            " elements, got " + std::to_string(elements.size()));
    std::vector<std::int64_t> position(static_cast<std::size_t>(p), -1);
    std::vector<bool> pair_seen(half + 1, false);
    for (std::size_t j = 0; j < elements.size(); ++j) {
        const std::int64_t r = elements[j];
        if (r < 1 || r > p - 1)
            fail(Errc::invalid_half_system, "element " + std::to_string(r) + " outside [1, p-1]");
        const auto pair = static_cast<std::size_t>(std::min(r, p - r));
        if (pair_seen[pair])
            fail(Errc::invalid_half_system, "residue class of " + std::to_string(r) + " represented twice up to sign");
        pair_seen[pair] = true;
        position[static_cast<std::size_t>(r)] = static_cast<std::int64_t>(j);
    }
    return HalfSystem(p, std::move(elements), std::move(position));
}

int legendre_brute(std::int64_t a, std::int64_t p)
{
    require_odd_prime(p);
    const std::int64_t r = mod(a, p);
    if (r == 0)
        return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (static_cast<std::int64_t>(mul_mod(x, x, p)) == r)
            return 1;
    return -1;
}

int legendre_euler(std::int64_t a, std::int64_t p)
{
    require_odd_prime(p);
    const std::int64_t v = mod_pow(a, static_cast<std::uint64_t>((p - 1) / 2), p);
    if (v == 0)
        return 0;
    if (v == 1)
        return 1;
    if (v == p - 1)
        return -1;
    fail(Errc::internal_error, "Euler criterion produced " + std::to_string(v) + " mod " + std::to_string(p));
}

GaussLemmaResult gauss_lemma(std::int64_t a, std::int64_t p, const HalfSystem& half_system)
{
    require_odd_prime(p);
    if (half_system.prime() != p)
        fail(Errc::invalid_half_system, "half-system is for p = " + std::to_string(half_system.prime()));
    const std::int64_t ar = mod(a, p);
    if (ar == 0)
        fail(Errc::not_coprime, std::to_string(a) + " is divisible by " + std::to_string(p));

    GaussLemmaTrace trace{a, {}, 1};
    trace.rows.reserve(half_system.size());
    const auto& elems = half_system.elements();
    for (std::size_t j = 0; j < elems.size(); ++j) {
        const auto product = static_cast<std::int64_t>(mul_mod(ar, elems[j], p));
        std::int64_t idx = half_system.index_of(product);
        int sign = 1;
        if (idx < 0) {
            sign = -1;
            idx = half_system.index_of(p - product);
        }
        trace.rows.push_back({j, product, sign, static_cast<std::size_t>(idx)});
        trace.sign_product *= sign;
    }
    return {trace.sign_product, std::move(trace)};
}

int jacobi(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0)
        fail(Errc::invalid_argument, "Jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
    return jacobi_u(static_cast<std::uint64_t>(mod(a, n)), static_cast<std::uint64_t>(n));
}

int kronecker(std::int64_t d, std::int64_t a)
{
    if (a == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    if (a < 0 && d < 0)
        result = -1;
    std::uint64_t n = abs_u(a);
    if ((n & 1) == 0) {
        if ((d & 1) == 0)
            return 0;
        const std::int64_t r = mod(d, 8);
        const int chi2 = (r == 1 || r == 7) ? 1 : -1;
        while ((n & 1) == 0) {
            n >>= 1;
            result *= chi2;
        }
    }
    if (n == 1)
        return result;
    return result * jacobi_u(static_cast<std::uint64_t>(mod(d, static_cast<std::int64_t>(n))), n);
}

std::int64_t pstar(std::int64_t p)
{
    require_odd_prime(p);
    return p % 4 == 1 ? p : -p;
}

HalfSystem default_half_system(std::int64_t p)
{
    require_odd_prime(p);
    std::vector<std::int64_t> elems(static_cast<std::size_t>((p - 1) / 2));
    std::iota(elems.begin(), elems.end(), 1);
    return HalfSystem::make(p, std::move(elems));
}

HalfSystem random_half_system(std::int64_t p, std::mt19937_64& rng)
{
    require_odd_prime(p);
    std::vector<std::int64_t> elems;
    elems.reserve(static_cast<std::size_t>((p - 1) / 2));
    std::bernoulli_distribution flip(0.5);
    for (std::int64_t x = 1; x <= (p - 1) / 2; ++x)
        elems.push_back(flip(rng) ? x : p - x);
    std::shuffle(elems.begin(), elems.end(), rng);
    return HalfSystem::make(p, std::move(elems));
}

} // namespace qrcft

#include "qrcft/classfield.hpp"

#include "qrcft/arith.hpp"
#include "qrcft/error.hpp"
#include "qrcft/symbols.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qrcft {

namespace {

void require_prime(std::int64_t p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        fail(Errc::invalid_argument, std::to_string(p) + " is not prime");
}

std::string u128_to_string(unsigned __int128 v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// Multiplies acc by p^e, returning false on 128-bit overflow.
bool checked_mul_pow(unsigned __int128& acc, std::uint64_t p, int e)
{
    constexpr auto kMax = ~static_cast<unsigned __int128>(0);
    for (int i = 0; i < e; ++i) {
        if (acc > kMax / p)
            return false;
        acc *= p;
    }
    return true;
}

} // namespace

std::string Modulus::to_string() const
{
    return std::to_string(m0) + (infinite ? "∞" : "");
}

bool is_fundamental_discriminant(std::int64_t d)
{
    if (d == 0 || d == 1)
        return false;
    const auto abs_u = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
    if (mod(d, 4) == 1)
        return is_squarefree(abs_u(d));
    if (mod(d, 4) != 0)
        return false;
    const std::int64_t m = d / 4;
    const std::int64_t r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(abs_u(m));
}

FundamentalDiscriminant FundamentalDiscriminant::make(std::int64_t d)
{
    if (!is_fundamental_discriminant(d))
        fail(Errc::invalid_discriminant, std::to_string(d) + " is not a fundamental discriminant");
    return FundamentalDiscriminant(d);
}

std::vector<FundamentalDiscriminant> fundamental_discriminants(std::int64_t max_abs)
{
    std::vector<FundamentalDiscriminant> out;
    for (std::int64_t d = -max_abs; d <= max_abs; ++d)
        if (is_fundamental_discriminant(d))
            out.push_back(FundamentalDiscriminant::make(d));
    return out;
}

RayClassGroup ray_class_group(const Modulus& m)
{
    if (m.m0 < 1)
        fail(Errc::invalid_argument, "modulus finite part must be positive");
    const std::int64_t m0 = m.m0;
    const bool fold = !m.infinite && m0 > 2;
    const std::uint64_t phi = euler_phi(static_cast<std::uint64_t>(m0));
    if ((fold ? phi / 2 : phi) > kMaxGroupOrder)
        fail(Errc::too_large, "ray class group mod " + m.to_string() + " exceeds table bound");

    RayClassGroup g;
    g.modulus_ = m;
    g.index_.assign(static_cast<std::size_t>(m0), -1);
    std::vector<std::int64_t> labels;
    for (std::int64_t r = 0; r < m0; ++r) {
        if (std::gcd(r, m0) != 1)
            continue;
        const std::int64_t rep = fold ? std::min(r, m0 - r) : r;
        if (rep == r) {
            g.index_[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(labels.size());
            labels.push_back(m0 == 1 ? 1 : r);
        }
    }
    for (std::int64_t r = 0; r < m0; ++r)
        if (std::gcd(r, m0) == 1 && fold)
            g.index_[static_cast<std::size_t>(r)] = g.index_[static_cast<std::size_t>(std::min(r, m0 - r))];

    const std::size_t n = labels.size();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto prod = static_cast<std::int64_t>(mul_mod(mod(labels[a], m0), mod(labels[b], m0), m0));
            table[a * n + b] = static_cast<std::uint16_t>(g.index_[static_cast<std::size_t>(prod)]);
        }
    const auto identity = static_cast<Element>(g.index_[static_cast<std::size_t>(mod(1, m0))]);
    g.group_ = FiniteGroup::from_table(n, std::move(table), identity, std::move(labels));
    return g;
}

Element RayClassGroup::class_of_residue(std::int64_t r) const
{
    const std::int64_t red = mod(r, modulus_.m0);
    if (std::gcd(red, modulus_.m0) != 1)
        fail(Errc::not_coprime, std::to_string(r) + " is not coprime to " + std::to_string(modulus_.m0));
    return static_cast<Element>(index_[static_cast<std::size_t>(red)]);
}

RayClass ideal_class(const RayClassGroup& g, std::int64_t num, std::int64_t den)
{
    if (num == 0 || den <= 0)
        fail(Errc::invalid_argument, "ideal needs a nonzero numerator and positive denominator");
    const std::int64_t m0 = g.modulus().m0;
    if (std::gcd(mod(num, m0), m0) != 1 || std::gcd(mod(den, m0), m0) != 1)
        fail(Errc::not_coprime, "ideal (" + std::to_string(num) + "/" + std::to_string(den) + ") is not coprime to " +
                                    std::to_string(m0));
    const std::int64_t abs_num = num < 0 ? -num : num;
    const FiniteGroup& grp = *g.group();
    const Element e = grp.op(g.class_of_residue(abs_num), grp.inverse(g.class_of_residue(den)));
    return RayClass{g.group(), g.modulus(), e, grp.label(e)};
}

std::string Provenance::to_string() const
{
    const std::string arg = "(" + std::to_string(parameter) + ")";
    switch (kind) {
    case Kind::takagi_quadratic: return "takagi-quadratic" + arg;
    case Kind::takagi_cyclotomic: return "takagi-cyclotomic" + arg;
    case Kind::squares: return "squares" + arg;
    case Kind::character_kernel: return "character-kernel" + arg;
    case Kind::custom: return "custom";
    }
    return "custom";
}

IdealGroupH takagi_group_quadratic(const FundamentalDiscriminant& d)
{
    RayClassGroup g = ray_class_group(d.modulus());
    std::vector<Element> members;
    for (Element e = 0; e < g.order(); ++e)
        if (kronecker(d.value(), g.label(e)) == 1)
            members.push_back(e);
    Subgroup h = Subgroup::from_members(g.group(), std::move(members));
    return IdealGroupH{std::move(g), std::move(h), {Provenance::Kind::takagi_quadratic, d.value()}};
}

IdealGroupH takagi_group_cyclotomic(std::int64_t m)
{
    if (m < 3)
        fail(Errc::invalid_argument, "cyclotomic modulus must be at least 3");
    RayClassGroup g = ray_class_group({m, true});
    Subgroup h = Subgroup::trivial(g.group());
    return IdealGroupH{std::move(g), std::move(h), {Provenance::Kind::takagi_cyclotomic, m}};
}

IdealGroupH squares_group(std::int64_t p)
{
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        fail(Errc::invalid_argument, "squares group needs an odd prime, got " + std::to_string(p));
    RayClassGroup g = ray_class_group({p, true});
    const FiniteGroup& grp = *g.group();
    std::vector<Element> members;
    for (Element e = 0; e < grp.order(); ++e)
        members.push_back(grp.op(e, e));
    Subgroup h = Subgroup::from_members(g.group(), std::move(members));
    return IdealGroupH{std::move(g), std::move(h), {Provenance::Kind::squares, p}};
}

std::size_t index(const IdealGroupH& h)
{
    return h.parent.order() / h.subgroup.order();
}

InequalityCheck first_inequality_check(const IdealGroupH& h, std::uint64_t degree)
{
    if (degree == 0)
        fail(Errc::invalid_argument, "degree must be positive");
    const std::size_t idx = index(h);
    return {idx, degree, idx <= degree, degree % idx == 0};
}

RayClass artin_symbol_cyclotomic(std::int64_t p, const RayClassGroup& g)
{
    require_prime(p);
    if (!g.modulus().infinite)
        fail(Errc::invalid_argument, "cyclotomic Artin symbol lives in a ray class group with the real place");
    if (g.modulus().m0 % p == 0)
        fail(Errc::ramified, std::to_string(p) + " ramifies in Q(zeta_" + std::to_string(g.modulus().m0) + ")");
    return ideal_class(g, p, 1);
}

RayClass artin_symbol_cyclotomic(std::int64_t p, std::int64_t m)
{
    if (m < 3)
        fail(Errc::invalid_argument, "cyclotomic modulus must be at least 3");
    return artin_symbol_cyclotomic(p, ray_class_group({m, true}));
}

int artin_symbol_quadratic(std::int64_t q, const FundamentalDiscriminant& d)
{
    require_prime(q);
    if (d.value() % q == 0)
        fail(Errc::ramified, std::to_string(q) + " ramifies in the field of discriminant " + std::to_string(d.value()));
    return kronecker(d.value(), q);
}

ConstancyReport artin_class_constancy_check(const FundamentalDiscriminant& d, std::int64_t bound)
{
    ConstancyReport report{d.value(), d.modulus(), {}, std::nullopt};
    if (bound < 3)
        return report;
    const RayClassGroup g = ray_class_group(d.modulus());
    std::vector<std::optional<ClassConstancyEntry>> by_class(g.order());
    for (const std::int64_t p : primes_up_to(bound)) {
        if (p == 2 || d.value() % p == 0)
            continue;
        const Element c = g.class_of_residue(p);
        const int v = kronecker(d.value(), p);
        auto& entry = by_class[c];
        if (!entry) {
            entry = ClassConstancyEntry{g.label(c), v, 1, p};
            continue;
        }
        ++entry->prime_count;
        if (entry->value != v && !report.counterexample)
            report.counterexample = ConstancyCounterexample{entry->label, entry->first_prime, entry->value, p, v};
    }
    for (const auto& entry : by_class)
        if (entry)
            report.classes.push_back(*entry);
    std::sort(report.classes.begin(), report.classes.end(),
              [](const auto& a, const auto& b) { return a.label < b.label; });
    return report;
}

bool character_factors_through(const FundamentalDiscriminant& d, const Modulus& m)
{
    const std::int64_t n = d.abs();
    if (m.m0 < 1 || n % m.m0 != 0)
        fail(Errc::invalid_argument, "modulus " + m.to_string() + " does not divide " + std::to_string(n));
    std::vector<int> seen(static_cast<std::size_t>(m.m0), 0);
    for (std::int64_t r = 1; r <= n; ++r) {
        if (std::gcd(r, n) != 1)
            continue;
        std::int64_t key = r % m.m0;
        if (!m.infinite)
            key = std::min(key, (m.m0 - key) % m.m0);
        const int v = kronecker(d.value(), r);
        int& slot = seen[static_cast<std::size_t>(key)];
        if (slot == 0)
            slot = v;
        else if (slot != v)
            return false;
    }
    return true;
}

Modulus conductor_quadratic(const FundamentalDiscriminant& d)
{
    for (const std::uint64_t f : divisors(static_cast<std::uint64_t>(d.abs())))
        for (const bool inf : {false, true}) {
            const Modulus m{static_cast<std::int64_t>(f), inf};
            if (character_factors_through(d, m))
                return m;
        }
    fail(Errc::internal_error, "no conductor found for " + std::to_string(d.value()));
}

bool verify_takagi_witness(const TakagiWitness& w, std::int64_t prime_bound)
{
    const std::int64_t n = w.d < 0 ? -w.d : w.d;
    if (w.a <= 0 || std::gcd(w.a, n) != 1)
        return false;
    std::int64_t num = mod(w.a, n), den = mod(1, n);
    for (const auto& [p, e] : w.factors) {
        if (p > prime_bound || !is_prime(static_cast<std::uint64_t>(p)) || kronecker(w.d, p) != 1)
            return false;
        if (e == 0 || e < -3 || e > 3)
            return false;
        const std::int64_t pe = mod_pow(p, static_cast<std::uint64_t>(e < 0 ? -e : e), std::max<std::int64_t>(n, 2));
        if (e > 0)
            den = static_cast<std::int64_t>(mul_mod(den, pe, n));
        else
            num = static_cast<std::int64_t>(mul_mod(num, pe, n));
    }
    // s > 0 holds since a and every prime are positive.
    return mod(num - den, n) == 0;
}

TakagiWitness takagi_witness(std::int64_t a, const FundamentalDiscriminant& d, std::int64_t prime_bound)
{
    if (a <= 0)
        fail(Errc::invalid_argument, "a must be positive");
    const std::int64_t n = d.abs();
    if (std::gcd(a, n) != 1)
        fail(Errc::not_coprime, std::to_string(a) + " is not coprime to " + std::to_string(d.value()));
    if (kronecker(d.value(), a) != 1)
        fail(Errc::not_in_takagi_group,
             "(" + std::to_string(d.value()) + "/" + std::to_string(a) + ") != +1, so (a) is not in the Takagi group");

    // Positive generators throughout: s must be = 1 mod |d| on the nose, so
    // the search runs in the ray class group mod |d| times infinity.
    const RayClassGroup g = ray_class_group({n, true});
    const FiniteGroup& grp = *g.group();

    // Least split prime in each class; larger primes in the same class add nothing.
    std::vector<std::pair<std::int64_t, Element>> generators;
    std::vector<bool> class_taken(grp.order(), false);
    for (const std::int64_t p : primes_up_to(prime_bound)) {
        if (n % p == 0 || kronecker(d.value(), p) != 1)
            continue;
        const Element c = g.class_of_residue(p);
        if (!class_taken[c]) {
            class_taken[c] = true;
            generators.emplace_back(p, c);
        }
    }

    struct State {
        Element cls;
        std::vector<std::pair<std::int64_t, int>> path;
    };
    static constexpr int kExponents[] = {1, -1, 2, -2, 3, -3};

    std::vector<bool> visited(grp.order(), false);
    std::deque<State> queue{{g.class_of_residue(a), {}}};
    visited[queue.front().cls] = true;
    std::optional<std::vector<std::pair<std::int64_t, int>>> found;
    while (!queue.empty() && !found) {
        State s = std::move(queue.front());
        queue.pop_front();
        if (s.cls == grp.identity()) {
            found = std::move(s.path);
            break;
        }
        for (const auto& [p, c] : generators) {
            const bool used = std::any_of(s.path.begin(), s.path.end(), [p = p](const auto& f) { return f.first == p; });
            if (used)
                continue;
            for (const int e : kExponents) {
                const Element next = grp.op(s.cls, grp.power(c, -e));
                if (visited[next])
                    continue;
                visited[next] = true;
                auto path = s.path;
                path.emplace_back(p, e);
                queue.push_back({next, std::move(path)});
            }
        }
    }
    if (!found)
        fail(Errc::witness_not_found, "no witness with primes up to " + std::to_string(prime_bound));

    TakagiWitness w{a, d.value(), std::move(*found), {}, {}};
    std::sort(w.factors.begin(), w.factors.end());
    unsigned __int128 num = static_cast<std::uint64_t>(a), den = 1;
    bool ok = true;
    for (const auto& [p, e] : w.factors)
        ok = ok && checked_mul_pow(e > 0 ? den : num, static_cast<std::uint64_t>(p), e > 0 ? e : -e);
    if (ok) {
        w.numerator = u128_to_string(num);
        w.denominator = u128_to_string(den);
    }
    if (!verify_takagi_witness(w, prime_bound))
        fail(Errc::internal_error, "takagi witness failed re-verification");
    return w;
}

} // namespace qrcft

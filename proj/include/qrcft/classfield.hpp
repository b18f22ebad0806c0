#pragma once

#include "qrcft/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Ray class groups of Q, ideal groups inside them, Artin symbols for
// cyclotomic and quadratic fields, conductors and Takagi-group witnesses.
namespace qrcft {

// Finite part m0 >= 1 times, optionally, the real place.
struct Modulus {
    std::int64_t m0 = 1;
    bool infinite = false;

    std::string to_string() const;
    friend bool operator==(const Modulus&, const Modulus&) = default;
};

bool is_fundamental_discriminant(std::int64_t d);

class FundamentalDiscriminant {
public:
    // Throws invalid_discriminant unless d is the discriminant of a quadratic field.
    static FundamentalDiscriminant make(std::int64_t d);

    std::int64_t value() const { return d_; }
    std::int64_t abs() const { return d_ < 0 ? -d_ : d_; }

    // (d) for d > 0, (d) times the real place for d < 0.
    Modulus modulus() const { return {abs(), d_ < 0}; }

private:
    explicit FundamentalDiscriminant(std::int64_t d) : d_(d) {}

    std::int64_t d_;
};

// All fundamental discriminants with |d| <= max_abs, ascending.
std::vector<FundamentalDiscriminant> fundamental_discriminants(std::int64_t max_abs);

// D_m / P_m for Q. With the real place every class has a unique positive
// generator and is labeled by its residue mod m0; without it, a and -a are
// identified and the class is labeled by min(a, m0 - a).
class RayClassGroup {
public:
    const Modulus& modulus() const { return modulus_; }
    const GroupPtr& group() const { return group_; }
    std::size_t order() const { return group_->order(); }
    std::int64_t label(Element e) const { return group_->label(e); }

    // Class of the principal ideal generated by a positive integer with
    // residue r. Throws not_coprime if gcd(r, m0) != 1.
    Element class_of_residue(std::int64_t r) const;

private:
    friend RayClassGroup ray_class_group(const Modulus& m);

    Modulus modulus_;
    GroupPtr group_;
    std::vector<std::int32_t> index_;
};

RayClassGroup ray_class_group(const Modulus& m);

struct RayClass {
    GroupPtr group;
    Modulus modulus;
    Element element;
    std::int64_t label;

    std::size_t order() const { return group->element_order(element); }
};

// Class of the fractional ideal (num / den); the sign of num is irrelevant.
RayClass ideal_class(const RayClassGroup& g, std::int64_t num, std::int64_t den = 1);

struct Provenance {
    enum class Kind { takagi_quadratic, takagi_cyclotomic, squares, character_kernel, custom };

    Kind kind = Kind::custom;
    std::int64_t parameter = 0;

    std::string to_string() const;
};

struct IdealGroupH {
    RayClassGroup parent;
    Subgroup subgroup;
    Provenance provenance;
};

IdealGroupH takagi_group_quadratic(const FundamentalDiscriminant& d);
IdealGroupH takagi_group_cyclotomic(std::int64_t m);
IdealGroupH squares_group(std::int64_t p);

// (D_m : H)
std::size_t index(const IdealGroupH& h);

struct InequalityCheck {
    std::size_t index;
    std::uint64_t degree;
    bool holds;   // index <= degree
    bool divides; // index | degree
};

InequalityCheck first_inequality_check(const IdealGroupH& h, std::uint64_t degree);

// Frobenius of p in Q(zeta_m), as the class of p in the ray class group mod m times infinity.
RayClass artin_symbol_cyclotomic(std::int64_t p, std::int64_t m);
RayClass artin_symbol_cyclotomic(std::int64_t p, const RayClassGroup& g);

int artin_symbol_quadratic(std::int64_t q, const FundamentalDiscriminant& d);

struct ClassConstancyEntry {
    std::int64_t label;
    int value;
    std::size_t prime_count;
    std::int64_t first_prime;
};

struct ConstancyCounterexample {
    std::int64_t label;
    std::int64_t p;
    int value_p;
    std::int64_t q;
    int value_q;
};

struct ConstancyReport {
    std::int64_t d;
    Modulus modulus;
    std::vector<ClassConstancyEntry> classes; // ascending by label
    std::optional<ConstancyCounterexample> counterexample;

    bool constant() const { return !counterexample.has_value(); }
};

// Checks that (d / p) only depends on the ray class of p mod m(d), over odd primes p <= bound.
ConstancyReport artin_class_constancy_check(const FundamentalDiscriminant& d, std::int64_t bound);

// True when (d / .) on positive integers coprime to d is constant on the
// ray classes mod `m` (m.m0 must divide |d|).
bool character_factors_through(const FundamentalDiscriminant& d, const Modulus& m);

Modulus conductor_quadratic(const FundamentalDiscriminant& d);

struct TakagiWitness {
    std::int64_t a;
    std::int64_t d;
    // Primes with (d/p) = +1 and exponents in [-3, 3]; s = a / prod p^e.
    std::vector<std::pair<std::int64_t, int>> factors;
    // Decimal digits of s = numerator / denominator; empty if either overflows 128 bits.
    std::string numerator;
    std::string denominator;
};

// Writes a = r s with r a product of split primes (fractional exponents
// allowed) and s = 1 mod |d|, s > 0.
TakagiWitness takagi_witness(std::int64_t a, const FundamentalDiscriminant& d, std::int64_t prime_bound = 10000);

// Independent re-check of a witness; used before returning and by tests.
bool verify_takagi_witness(const TakagiWitness& w, std::int64_t prime_bound);

} // namespace qrcft

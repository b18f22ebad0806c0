#pragma once

#include "qrcft/classfield.hpp"
#include "qrcft/groups.hpp"
#include "qrcft/symbols.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

// Decomposition of rational primes in quadratic fields, cyclotomic fields
// and subfields of cyclotomic fields, and the two reciprocity drivers built
// on those laws.
namespace qrcft {

struct SplittingType {
    std::uint64_t e = 1;
    std::uint64_t f = 1;
    std::uint64_t g = 1;

    std::uint64_t degree() const { return e * f * g; }
    // "split", "inert" or "ramified" for degree 2; "(e,f,g)" otherwise.
    std::string word() const;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct QuadraticField {
    FundamentalDiscriminant d;
};

struct CyclotomicField {
    std::int64_t m;
};

// Fixed field of U inside Q(zeta_m); U is a subgroup of group_from_unit_residues(m).
struct CyclotomicSubfield {
    std::int64_t m;
    Subgroup u;
};

using FieldDescriptor = std::variant<QuadraticField, CyclotomicField, CyclotomicSubfield>;

// Throws invalid_argument unless U's parent is the unit-residue group mod m.
FieldDescriptor make_cyclotomic_subfield(std::int64_t m, Subgroup u);

std::uint64_t degree(const FieldDescriptor& field);
std::string describe(const FieldDescriptor& field);

SplittingType splitting_quadratic(std::int64_t q, const FundamentalDiscriminant& d);
SplittingType splitting_cyclotomic(std::int64_t q, std::int64_t m);
SplittingType splitting_in_subfield(std::int64_t q, std::int64_t m, const Subgroup& u);
SplittingType splitting(std::int64_t q, const FieldDescriptor& field);

bool splits_completely_in_class_field(std::int64_t q, const IdealGroupH& h);

// Unramified primes q <= bound with f = 1.
std::vector<std::int64_t> spl_set(const FieldDescriptor& field, std::int64_t bound);

struct TransferKernelClassField {
    IdealGroupH h;
    FieldDescriptor field;
};

// Kernel of the transfer (Z/p)^x -> {+-1}, checked against the squares
// group, together with its class field Q(sqrt(p*)).
TransferKernelClassField transfer_kernel_classfield(std::int64_t p);

struct GaussTransferReport {
    std::int64_t p;
    std::int64_t a;
    std::vector<std::int64_t> half_system;
    TransferResult transfer;
    int transfer_value; // +1 or -1
    GaussLemmaResult gauss;
    int symbol; // legendre_euler(a, p)
    bool signs_match;    // multiset of u_i equals multiset of s_j
    bool rows_match;     // row-by-row: u_i = s_i and target coset = pi(i)
    bool value_matches;  // transfer value = Gauss product = symbol

    bool ok() const { return signs_match && rows_match && value_matches; }
};

// Transfer of a's class to U = {+-1} with the half-system as coset
// representatives, side by side with the Gauss Lemma trace.
GaussTransferReport gauss_lemma_is_transfer(std::int64_t p, std::int64_t a, const HalfSystem& half_system);

struct QrComparison {
    int lhs;
    int rhs;
    bool equal;
};

// (p*/q) from Euler's criterion mod q against splitting of q in the class
// field of the squares group mod p times infinity.
QrComparison qr_via_splitting(std::int64_t p, std::int64_t q);
QrComparison qr_via_splitting(std::int64_t p, std::int64_t q, const IdealGroupH& squares);

// Transfer data for G = (Z/p)^x, U = {+-1}, built once per p.
struct SignTransferContext {
    std::int64_t p;
    GroupPtr group;
    CosetDecomposition decomposition;

    static SignTransferContext make(std::int64_t p);
    // Transfer value of r mod p as +1 / -1.
    int value(std::int64_t r) const;
};

// (p*/q) against the transfer value of q's class in (Z/p)^x -> {+-1}.
QrComparison qr_via_transfer(std::int64_t p, std::int64_t q);
QrComparison qr_via_transfer(const SignTransferContext& ctx, std::int64_t q);

} // namespace qrcft

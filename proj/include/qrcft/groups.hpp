#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

// Finite groups given by explicit multiplication tables, with subgroup
// closure, coset decompositions and the transfer map computed from the
// coset formula g r_i = r_j u_i.
namespace qrcft {

using Element = std::uint32_t;

// Largest group order that will be materialized as a table.
inline constexpr std::size_t kMaxGroupOrder = 4096;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    // Builds a group from a row-major table. Identity and inverses are
    // verified; associativity is not (see is_associative). Throws too_large
    // above kMaxGroupOrder and invalid_argument for a malformed table.
    static GroupPtr from_table(std::size_t order, std::vector<std::uint16_t> table, Element identity,
                               std::vector<std::int64_t> labels = {});

    std::size_t order() const { return order_; }
    Element identity() const { return identity_; }
    Element op(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Element inverse(Element a) const { return inverse_[a]; }
    Element power(Element a, std::int64_t k) const;
    std::size_t element_order(Element a) const;

    bool has_labels() const { return !labels_.empty(); }
    // Display label for an element; the element id itself when unlabeled.
    std::int64_t label(Element a) const { return labels_.empty() ? static_cast<std::int64_t>(a) : labels_[a]; }
    std::optional<Element> find_label(std::int64_t label) const;

    bool is_abelian() const;

    // Exhaustive check when samples == 0 and order <= 1000, otherwise
    // `samples` random triples.
    bool is_associative(std::size_t samples = 0, std::uint64_t seed = 1) const;

private:
    FiniteGroup() = default;

    std::size_t order_ = 0;
    Element identity_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<Element> inverse_;
    std::vector<std::int64_t> labels_;
    std::unordered_map<std::int64_t, Element> by_label_;
};

class Subgroup {
public:
    // Validates identity membership and closure; throws invalid_argument.
    static Subgroup from_members(GroupPtr parent, std::vector<Element> members);
    static Subgroup whole(GroupPtr parent);
    static Subgroup trivial(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const FiniteGroup& group() const { return *parent_; }
    const std::vector<Element>& members() const { return members_; }
    bool contains(Element a) const { return mask_[a]; }
    std::size_t order() const { return members_.size(); }
    std::size_t index() const { return parent_->order() / members_.size(); }
    bool is_abelian() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b)
    {
        return a.parent_ == b.parent_ && a.members_ == b.members_;
    }

private:
    Subgroup(GroupPtr parent, std::vector<Element> members, std::vector<bool> mask)
        : parent_(std::move(parent)), members_(std::move(members)), mask_(std::move(mask))
    {
    }

    GroupPtr parent_;
    std::vector<Element> members_; // sorted
    std::vector<bool> mask_;
};

// (Z/m)^x under multiplication; elements labeled by residues in ascending order.
GroupPtr group_from_unit_residues(std::int64_t m);

// Z/n under addition; element k is labeled k.
GroupPtr cyclic_group(std::size_t n);

// Element (a, b) has id a * |H| + b; labels are dropped.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

Subgroup subgroup_generated(const GroupPtr& group, std::span<const Element> generators);
Subgroup derived_subgroup(const Subgroup& u);

// Every subgroup of `group`, ordered by discovery. Throws too_large once
// more than `limit` subgroups are found.
std::vector<Subgroup> all_subgroups(const GroupPtr& group, std::size_t limit = 20000);

// Order of x U in G / U (U need not be normal: least k >= 1 with x^k in U).
std::size_t quotient_order(const Subgroup& u, Element x);

// True when G / U is cyclic, i.e. some coset x U has order (G : U).
bool quotient_is_cyclic(const Subgroup& u);

// Left cosets r_i U with one representative per coset.
class CosetDecomposition {
public:
    // Throws invalid_argument unless the cosets r U are disjoint and cover G.
    static CosetDecomposition from_reps(Subgroup u, std::vector<Element> reps);

    const Subgroup& subgroup() const { return subgroup_; }
    const std::vector<Element>& reps() const { return reps_; }
    std::size_t coset_of(Element x) const { return coset_of_[x]; }

private:
    CosetDecomposition(Subgroup u, std::vector<Element> reps, std::vector<std::uint32_t> coset_of)
        : subgroup_(std::move(u)), reps_(std::move(reps)), coset_of_(std::move(coset_of))
    {
    }

    Subgroup subgroup_;
    std::vector<Element> reps_;
    std::vector<std::uint32_t> coset_of_;
};

// Least element id of each coset, ascending.
CosetDecomposition coset_decomposition(const Subgroup& u);

// A uniformly random member of each coset, in shuffled order.
CosetDecomposition random_coset_decomposition(const Subgroup& u, std::mt19937_64& rng);

struct TransferContribution {
    std::size_t i; // source representative index
    std::size_t j; // target representative index
    Element u;     // g r_i = r_j u
};

struct TransferResult {
    // Least-id element of the coset (prod u) U' in U.
    Element value;
    std::vector<TransferContribution> contributions;
};

// Least-id element of x N, for x in the group containing N.
Element coset_canonical(const Subgroup& n, Element x);

TransferResult transfer(const CosetDecomposition& decomposition, Element g);
// Same, with U' supplied by the caller to avoid recomputing it.
TransferResult transfer(const CosetDecomposition& decomposition, Element g, const Subgroup& derived);

// A map between table groups whose values are canonical representatives of
// cosets of `modulo` (trivial for plain maps).
struct TabulatedHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<Element> images;
    Subgroup modulo;
};

TabulatedHom transfer_homomorphism(const Subgroup& u);
TabulatedHom transfer_homomorphism(const CosetDecomposition& decomposition);

bool is_homomorphism(const TabulatedHom& hom);

// Throws invalid_homomorphism if the table fails the homomorphism check.
Subgroup kernel_of(const TabulatedHom& hom);

// Distinct image values, ascending.
std::vector<Element> image_of(const TabulatedHom& hom);

} // namespace qrcft

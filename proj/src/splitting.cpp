#include "qrcft/splitting.hpp"

#include "qrcft/arith.hpp"
#include "qrcft/error.hpp"

#include <algorithm>
#include <numeric>

namespace qrcft {

namespace {

void require_prime(std::int64_t q)
{
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
        fail(Errc::invalid_argument, std::to_string(q) + " is not prime");
}

void require_odd_prime(std::int64_t p)
{
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        fail(Errc::invalid_argument, std::to_string(p) + " is not an odd prime");
}

Element unit_element(const FiniteGroup& g, std::int64_t m, std::int64_t r)
{
    const auto e = g.find_label(mod(r, m));
    if (!e)
        fail(Errc::not_coprime, std::to_string(r) + " is not a unit modulo " + std::to_string(m));
    return *e;
}

void require_unit_group(std::int64_t m, const Subgroup& u)
{
    if (m < 3)
        fail(Errc::invalid_argument, "cyclotomic modulus must be at least 3");
    const FiniteGroup& g = u.group();
    if (!g.has_labels() || g.order() != euler_phi(static_cast<std::uint64_t>(m)))
        fail(Errc::invalid_argument, "subgroup does not live in (Z/" + std::to_string(m) + ")^x");
    for (Element e = 0; e < g.order(); ++e) {
        const std::int64_t r = g.label(e);
        if (r < 1 || r >= m || std::gcd(r, m) != 1)
            fail(Errc::invalid_argument, "subgroup does not live in (Z/" + std::to_string(m) + ")^x");
    }
}

} // namespace

std::string SplittingType::word() const
{
    if (degree() == 2) {
        if (g == 2)
            return "split";
        if (f == 2)
            return "inert";
        return "ramified";
    }
    return "(" + std::to_string(e) + "," + std::to_string(f) + "," + std::to_string(g) + ")";
}

FieldDescriptor make_cyclotomic_subfield(std::int64_t m, Subgroup u)
{
    require_unit_group(m, u);
    return CyclotomicSubfield{m, std::move(u)};
}

std::uint64_t degree(const FieldDescriptor& field)
{
    struct Visitor {
        std::uint64_t operator()(const QuadraticField&) const { return 2; }
        std::uint64_t operator()(const CyclotomicField& c) const
        {
            if (c.m < 3)
                fail(Errc::invalid_argument, "cyclotomic modulus must be at least 3");
            return euler_phi(static_cast<std::uint64_t>(c.m));
        }
        std::uint64_t operator()(const CyclotomicSubfield& s) const { return s.u.index(); }
    };
    return std::visit(Visitor{}, field);
}

std::string describe(const FieldDescriptor& field)
{
    struct Visitor {
        std::string operator()(const QuadraticField& q) const { return "Q(sqrt(" + std::to_string(q.d.value()) + "))"; }
        std::string operator()(const CyclotomicField& c) const { return "Q(zeta_" + std::to_string(c.m) + ")"; }
        std::string operator()(const CyclotomicSubfield& s) const
        {
            std::string gens;
            for (const Element e : s.u.members())
                gens += (gens.empty() ? "" : ",") + std::to_string(s.u.group().label(e));
            return "Q(zeta_" + std::to_string(s.m) + ")^{" + gens + "}";
        }
    };
    return std::visit(Visitor{}, field);
}

SplittingType splitting_quadratic(std::int64_t q, const FundamentalDiscriminant& d)
{
    require_prime(q);
    switch (kronecker(d.value(), q)) {
    case 1: return {1, 1, 2};
    case -1: return {1, 2, 1};
    default: return {2, 1, 1};
    }
}

SplittingType splitting_cyclotomic(std::int64_t q, std::int64_t m)
{
    require_prime(q);
    if (m < 3)
        fail(Errc::invalid_argument, "cyclotomic modulus must be at least 3");
    std::int64_t rest = m;
    std::uint64_t qk = 1;
    while (rest % q == 0) {
        rest /= q;
        qk *= static_cast<std::uint64_t>(q);
    }
    SplittingType t;
    t.e = euler_phi(qk);
    t.f = rest <= 2 ? 1 : mult_order(q, rest);
    t.g = euler_phi(static_cast<std::uint64_t>(m)) / (t.e * t.f);
    return t;
}

SplittingType splitting_in_subfield(std::int64_t q, std::int64_t m, const Subgroup& u)
{
    require_prime(q);
    require_unit_group(m, u);
    if (m % q == 0)
        fail(Errc::ramified_unsupported, std::to_string(q) + " divides " + std::to_string(m));
    const Element frob = unit_element(u.group(), m, q);
    SplittingType t;
    t.f = quotient_order(u, frob);
    t.g = u.index() / t.f;
    return t;
}

SplittingType splitting(std::int64_t q, const FieldDescriptor& field)
{
    struct Visitor {
        std::int64_t q;
        SplittingType operator()(const QuadraticField& f) const { return splitting_quadratic(q, f.d); }
        SplittingType operator()(const CyclotomicField& f) const { return splitting_cyclotomic(q, f.m); }
        SplittingType operator()(const CyclotomicSubfield& f) const { return splitting_in_subfield(q, f.m, f.u); }
    };
    return std::visit(Visitor{q}, field);
}

bool splits_completely_in_class_field(std::int64_t q, const IdealGroupH& h)
{
    return h.subgroup.contains(ideal_class(h.parent, q).element);
}

std::vector<std::int64_t> spl_set(const FieldDescriptor& field, std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (const std::int64_t q : primes_up_to(bound)) {
        bool split = false;
        if (const auto* quad = std::get_if<QuadraticField>(&field)) {
            split = kronecker(quad->d.value(), q) == 1;
        } else if (const auto* cyc = std::get_if<CyclotomicField>(&field)) {
            split = cyc->m % q != 0 && q % cyc->m == 1;
        } else {
            const auto& sub = std::get<CyclotomicSubfield>(field);
            split = sub.m % q != 0 && sub.u.contains(unit_element(sub.u.group(), sub.m, q));
        }
        if (split)
            out.push_back(q);
    }
    return out;
}

TransferKernelClassField transfer_kernel_classfield(std::int64_t p)
{
    require_odd_prime(p);
    RayClassGroup g = ray_class_group({p, true});
    const Element minus_one = g.class_of_residue(p - 1);
    const Subgroup u = subgroup_generated(g.group(), std::span(&minus_one, 1));
    Subgroup h = kernel_of(transfer_homomorphism(u));
    if (h.members() != squares_group(p).subgroup.members())
        fail(Errc::internal_error, "transfer kernel mod " + std::to_string(p) + " differs from the squares");
    const std::int64_t ps = pstar(p);
    return {IdealGroupH{std::move(g), std::move(h), {Provenance::Kind::character_kernel, ps}},
            QuadraticField{FundamentalDiscriminant::make(ps)}};
}

GaussTransferReport gauss_lemma_is_transfer(std::int64_t p, std::int64_t a, const HalfSystem& half_system)
{
    GaussLemmaResult gauss = gauss_lemma(a, p, half_system);
    const GroupPtr g = group_from_unit_residues(p);
    const Element minus_one = unit_element(*g, p, p - 1);
    Subgroup u = subgroup_generated(g, std::span(&minus_one, 1));

    std::vector<Element> reps;
    for (const std::int64_t r : half_system.elements())
        reps.push_back(unit_element(*g, p, r));
    const auto decomposition = CosetDecomposition::from_reps(std::move(u), std::move(reps));
    TransferResult tr = transfer(decomposition, unit_element(*g, p, a));

    const auto sign_of = [&](Element x) { return g->label(x) == 1 ? 1 : -1; };
    std::vector<int> transfer_signs, gauss_signs;
    bool rows_match = tr.contributions.size() == gauss.trace.rows.size();
    for (std::size_t i = 0; rows_match && i < tr.contributions.size(); ++i) {
        const auto& c = tr.contributions[i];
        const auto& row = gauss.trace.rows[i];
        rows_match = c.i == row.j && c.j == row.target && sign_of(c.u) == row.sign;
    }
    for (const auto& c : tr.contributions)
        transfer_signs.push_back(sign_of(c.u));
    for (const auto& row : gauss.trace.rows)
        gauss_signs.push_back(row.sign);
    std::sort(transfer_signs.begin(), transfer_signs.end());
    std::sort(gauss_signs.begin(), gauss_signs.end());

    const int transfer_value = sign_of(tr.value);
    const int symbol = legendre_euler(a, p);
    GaussTransferReport report{p,
                               a,
                               half_system.elements(),
                               std::move(tr),
                               transfer_value,
                               std::move(gauss),
                               symbol,
                               transfer_signs == gauss_signs,
                               rows_match,
                               false};
    report.value_matches = transfer_value == report.gauss.value && transfer_value == symbol;
    return report;
}

QrComparison qr_via_splitting(std::int64_t p, std::int64_t q, const IdealGroupH& squares)
{
    require_odd_prime(p);
    require_odd_prime(q);
    if (p == q)
        fail(Errc::invalid_argument, "p and q must be distinct");
    const int lhs = legendre_euler(pstar(p), q);
    const int rhs = splits_completely_in_class_field(q, squares) ? 1 : -1;
    return {lhs, rhs, lhs == rhs};
}

QrComparison qr_via_splitting(std::int64_t p, std::int64_t q)
{
    return qr_via_splitting(p, q, squares_group(p));
}

SignTransferContext SignTransferContext::make(std::int64_t p)
{
    require_odd_prime(p);
    GroupPtr g = group_from_unit_residues(p);
    const Element minus_one = unit_element(*g, p, p - 1);
    auto decomposition = coset_decomposition(subgroup_generated(g, std::span(&minus_one, 1)));
    return SignTransferContext{p, std::move(g), std::move(decomposition)};
}

int SignTransferContext::value(std::int64_t r) const
{
    const TransferResult tr = transfer(decomposition, unit_element(*group, p, r));
    return group->label(tr.value) == 1 ? 1 : -1;
}

QrComparison qr_via_transfer(const SignTransferContext& ctx, std::int64_t q)
{
    require_odd_prime(q);
    if (ctx.p == q)
        fail(Errc::invalid_argument, "p and q must be distinct");
    const int rhs = ctx.value(q);
    const int lhs = kronecker(pstar(ctx.p), q);
    return {lhs, rhs, lhs == rhs};
}

QrComparison qr_via_transfer(std::int64_t p, std::int64_t q)
{
    return qr_via_transfer(SignTransferContext::make(p), q);
}

} // namespace qrcft

#include "qrcft/groups.hpp"

#include "qrcft/arith.hpp"
#include "qrcft/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace qrcft {

namespace {

void require_order(std::size_t order)
{
    if (order == 0)
        fail(Errc::invalid_argument, "group order must be positive");
    if (order > kMaxGroupOrder)
        fail(Errc::too_large, "group order " + std::to_string(order) + " exceeds table bound " +
                                  std::to_string(kMaxGroupOrder));
}

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> generators, std::vector<bool>& mask)
{
    mask.assign(g.order(), false);
    std::vector<Element> members{g.identity()};
    mask[g.identity()] = true;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
        const Element x = members[idx];
        for (const Element s : generators) {
            const Element y = g.op(x, s);
            if (!mask[y]) {
                mask[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace

GroupPtr FiniteGroup::from_table(std::size_t order, std::vector<std::uint16_t> table, Element identity,
                                 std::vector<std::int64_t> labels)
{
    require_order(order);
    if (table.size() != order * order)
        fail(Errc::invalid_argument, "table size does not match order");
    if (identity >= order)
        fail(Errc::invalid_argument, "identity out of range");
    if (!labels.empty() && labels.size() != order)
        fail(Errc::invalid_argument, "label count does not match order");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->identity_ = identity;
    g->table_ = std::move(table);
    g->labels_ = std::move(labels);

    for (Element a = 0; a < order; ++a) {
        if (g->op(identity, a) != a || g->op(a, identity) != a)
            fail(Errc::invalid_argument, "identity is not two-sided");
        for (Element b = 0; b < order; ++b)
            if (g->op(a, b) >= order)
                fail(Errc::invalid_argument, "table entry out of range");
    }
    g->inverse_.assign(order, 0);
    for (Element a = 0; a < order; ++a) {
        Element found = static_cast<Element>(order);
        for (Element b = 0; b < order; ++b) {
            if (g->op(a, b) == identity) {
                found = b;
                break;
            }
        }
        if (found == order || g->op(found, a) != identity)
            fail(Errc::invalid_argument, "element " + std::to_string(a) + " has no two-sided inverse");
        g->inverse_[a] = found;
    }
    for (Element a = 0; a < g->labels_.size(); ++a)
        if (!g->by_label_.emplace(g->labels_[a], a).second)
            fail(Errc::invalid_argument, "duplicate label " + std::to_string(g->labels_[a]));
    return g;
}

Element FiniteGroup::power(Element a, std::int64_t k) const
{
    Element base = a;
    if (k < 0) {
        base = inverse(a);
        k = -k;
    }
    Element result = identity_;
    while (k > 0) {
        if (k & 1)
            result = op(result, base);
        base = op(base, base);
        k >>= 1;
    }
    return result;
}

std::size_t FiniteGroup::element_order(Element a) const
{
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = op(x, a))
        ++k;
    return k;
}

std::optional<Element> FiniteGroup::find_label(std::int64_t label) const
{
    if (labels_.empty()) {
        if (label >= 0 && static_cast<std::size_t>(label) < order_)
            return static_cast<Element>(label);
        return std::nullopt;
    }
    const auto it = by_label_.find(label);
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

bool FiniteGroup::is_abelian() const
{
    for (Element a = 0; a < order_; ++a)
        for (Element b = a + 1; b < order_; ++b)
            if (op(a, b) != op(b, a))
                return false;
    return true;
}

bool FiniteGroup::is_associative(std::size_t samples, std::uint64_t seed) const
{
    if (samples == 0 && order_ <= 1000) {
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b) {
                const Element ab = op(a, b);
                for (Element c = 0; c < order_; ++c)
                    if (op(ab, c) != op(a, op(b, c)))
                        return false;
            }
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    const std::size_t n = samples == 0 ? 100000 : samples;
    for (std::size_t s = 0; s < n; ++s) {
        const Element a = pick(rng), b = pick(rng), c = pick(rng);
        if (op(op(a, b), c) != op(a, op(b, c)))
            return false;
    }
    return true;
}

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<Element> members)
{
    const FiniteGroup& g = *parent;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<bool> mask(g.order(), false);
    for (const Element x : members) {
        if (x >= g.order())
            fail(Errc::invalid_argument, "subgroup member out of range");
        mask[x] = true;
    }
    if (!mask[g.identity()])
        fail(Errc::invalid_argument, "subgroup must contain the identity");
    for (const Element a : members) {
        if (!mask[g.inverse(a)])
            fail(Errc::invalid_argument, "subgroup not closed under inverses");
        for (const Element b : members)
            if (!mask[g.op(a, b)])
                fail(Errc::invalid_argument, "subgroup not closed under the group law");
    }
    return Subgroup(std::move(parent), std::move(members), std::move(mask));
}

Subgroup Subgroup::whole(GroupPtr parent)
{
    std::vector<Element> all(parent->order());
    std::iota(all.begin(), all.end(), Element{0});
    std::vector<bool> mask(parent->order(), true);
    return Subgroup(std::move(parent), std::move(all), std::move(mask));
}

Subgroup Subgroup::trivial(GroupPtr parent)
{
    std::vector<bool> mask(parent->order(), false);
    const Element e = parent->identity();
    mask[e] = true;
    return Subgroup(std::move(parent), {e}, std::move(mask));
}

bool Subgroup::is_abelian() const
{
    const FiniteGroup& g = *parent_;
    for (std::size_t x = 0; x < members_.size(); ++x)
        for (std::size_t y = x + 1; y < members_.size(); ++y)
            if (g.op(members_[x], members_[y]) != g.op(members_[y], members_[x]))
                return false;
    return true;
}

GroupPtr group_from_unit_residues(std::int64_t m)
{
    if (m < 2)
        fail(Errc::invalid_argument, "unit group modulus must be at least 2");
    const std::uint64_t phi = euler_phi(static_cast<std::uint64_t>(m));
    require_order(phi);
    std::vector<std::int64_t> labels;
    std::vector<std::uint16_t> index(static_cast<std::size_t>(m), 0);
    for (std::int64_t r = 1; r < m; ++r) {
        if (std::gcd(r, m) != 1)
            continue;
        index[static_cast<std::size_t>(r)] = static_cast<std::uint16_t>(labels.size());
        labels.push_back(r);
    }
    const std::size_t n = labels.size();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = index[static_cast<std::size_t>(mul_mod(labels[a], labels[b], m))];
    return FiniteGroup::from_table(n, std::move(table), 0, std::move(labels));
}

GroupPtr cyclic_group(std::size_t n)
{
    require_order(n);
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
    return FiniteGroup::from_table(n, std::move(table), 0);
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h)
{
    const std::size_t ng = g->order(), nh = h->order();
    require_order(ng * nh);
    const std::size_t n = ng * nh;
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto a = g->op(static_cast<Element>(x / nh), static_cast<Element>(y / nh));
            const auto b = h->op(static_cast<Element>(x % nh), static_cast<Element>(y % nh));
            table[x * n + y] = static_cast<std::uint16_t>(a * nh + b);
        }
    const auto identity = static_cast<Element>(g->identity() * nh + h->identity());
    return FiniteGroup::from_table(n, std::move(table), identity);
}

Subgroup subgroup_generated(const GroupPtr& group, std::span<const Element> generators)
{
    for (const Element s : generators)
        if (s >= group->order())
            fail(Errc::invalid_argument, "generator out of range");
    std::vector<bool> mask;
    auto members = closure(*group, generators, mask);
    return Subgroup::from_members(group, std::move(members));
}

Subgroup derived_subgroup(const Subgroup& u)
{
    const FiniteGroup& g = u.group();
    std::vector<bool> seen(g.order(), false);
    std::vector<Element> commutators;
    for (const Element a : u.members())
        for (const Element b : u.members()) {
            const Element c = g.op(g.op(a, b), g.op(g.inverse(a), g.inverse(b)));
            if (!seen[c]) {
                seen[c] = true;
                commutators.push_back(c);
            }
        }
    return subgroup_generated(u.parent(), commutators);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group, std::size_t limit)
{
    const FiniteGroup& g = *group;
    std::vector<Subgroup> found{Subgroup::trivial(group)};
    std::vector<std::vector<Element>> gens{{}};
    std::set<std::vector<Element>> known{found.front().members()};

    for (std::size_t k = 0; k < found.size(); ++k) {
        std::vector<bool> covered(g.order(), false);
        for (Element x = 0; x < g.order(); ++x) {
            if (covered[x])
                continue;
            for (const Element h : found[k].members())
                covered[g.op(x, h)] = true;
            if (found[k].contains(x))
                continue;
            std::vector<Element> next_gens = gens[k];
            next_gens.push_back(x);
            std::vector<bool> mask;
            auto members = closure(g, next_gens, mask);
            if (!known.insert(members).second)
                continue;
            if (found.size() >= limit)
                fail(Errc::too_large, "more than " + std::to_string(limit) + " subgroups");
            found.push_back(Subgroup::from_members(group, std::move(members)));
            gens.push_back(std::move(next_gens));
        }
    }
    return found;
}

std::size_t quotient_order(const Subgroup& u, Element x)
{
    const FiniteGroup& g = u.group();
    std::size_t k = 1;
    for (Element y = x; !u.contains(y); y = g.op(y, x))
        ++k;
    return k;
}

bool quotient_is_cyclic(const Subgroup& u)
{
    const std::size_t f = u.index();
    for (Element x = 0; x < u.group().order(); ++x)
        if (quotient_order(u, x) == f)
            return true;
    return false;
}

CosetDecomposition CosetDecomposition::from_reps(Subgroup u, std::vector<Element> reps)
{
    const FiniteGroup& g = u.group();
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> coset_of(g.order(), kUnset);
    if (reps.size() != u.index())
        fail(Errc::invalid_argument, "expected " + std::to_string(u.index()) + " coset representatives");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i] >= g.order())
            fail(Errc::invalid_argument, "representative out of range");
        for (const Element h : u.members()) {
            auto& slot = coset_of[g.op(reps[i], h)];
            if (slot != kUnset)
                fail(Errc::invalid_argument, "representatives " + std::to_string(slot) + " and " + std::to_string(i) +
                                                 " lie in the same coset");
            slot = static_cast<std::uint32_t>(i);
        }
    }
    return CosetDecomposition(std::move(u), std::move(reps), std::move(coset_of));
}

CosetDecomposition coset_decomposition(const Subgroup& u)
{
    const FiniteGroup& g = u.group();
    std::vector<bool> covered(g.order(), false);
    std::vector<Element> reps;
    for (Element x = 0; x < g.order(); ++x) {
        if (covered[x])
            continue;
        reps.push_back(x);
        for (const Element h : u.members())
            covered[g.op(x, h)] = true;
    }
    return CosetDecomposition::from_reps(u, std::move(reps));
}

CosetDecomposition random_coset_decomposition(const Subgroup& u, std::mt19937_64& rng)
{
    const FiniteGroup& g = u.group();
    auto reps = coset_decomposition(u).reps();
    std::uniform_int_distribution<std::size_t> pick(0, u.order() - 1);
    for (auto& r : reps)
        r = g.op(r, u.members()[pick(rng)]);
    std::shuffle(reps.begin(), reps.end(), rng);
    return CosetDecomposition::from_reps(u, std::move(reps));
}

Element coset_canonical(const Subgroup& n, Element x)
{
    if (n.order() == 1)
        return x;
    const FiniteGroup& g = n.group();
    Element best = g.op(x, n.members().front());
    for (const Element v : n.members())
        best = std::min(best, g.op(x, v));
    return best;
}

TransferResult transfer(const CosetDecomposition& decomposition, Element g, const Subgroup& derived)
{
    const Subgroup& u = decomposition.subgroup();
    const FiniteGroup& grp = u.group();
    if (g >= grp.order())
        fail(Errc::invalid_argument, "element out of range");
    const auto& reps = decomposition.reps();
    TransferResult result{grp.identity(), {}};
    result.contributions.reserve(reps.size());
    Element product = grp.identity();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Element x = grp.op(g, reps[i]);
        const std::size_t j = decomposition.coset_of(x);
        const Element uj = grp.op(grp.inverse(reps[j]), x);
        result.contributions.push_back({i, j, uj});
        product = grp.op(product, uj);
    }
    result.value = coset_canonical(derived, product);
    return result;
}

TransferResult transfer(const CosetDecomposition& decomposition, Element g)
{
    const Subgroup& u = decomposition.subgroup();
    if (u.is_abelian())
        return transfer(decomposition, g, Subgroup::trivial(u.parent()));
    return transfer(decomposition, g, derived_subgroup(u));
}

TabulatedHom transfer_homomorphism(const CosetDecomposition& decomposition)
{
    const Subgroup& u = decomposition.subgroup();
    Subgroup derived = u.is_abelian() ? Subgroup::trivial(u.parent()) : derived_subgroup(u);
    const std::size_t n = u.group().order();
    std::vector<Element> images(n);
    for (Element g = 0; g < n; ++g)
        images[g] = transfer(decomposition, g, derived).value;
    return TabulatedHom{u.parent(), u.parent(), std::move(images), std::move(derived)};
}

TabulatedHom transfer_homomorphism(const Subgroup& u)
{
    return transfer_homomorphism(coset_decomposition(u));
}

bool is_homomorphism(const TabulatedHom& hom)
{
    const FiniteGroup& src = *hom.source;
    const FiniteGroup& dst = *hom.target;
    if (hom.images.size() != src.order())
        return false;
    for (Element a = 0; a < src.order(); ++a)
        for (Element b = 0; b < src.order(); ++b)
            if (hom.images[src.op(a, b)] != coset_canonical(hom.modulo, dst.op(hom.images[a], hom.images[b])))
                return false;
    return true;
}

Subgroup kernel_of(const TabulatedHom& hom)
{
    if (!is_homomorphism(hom))
        fail(Errc::invalid_homomorphism, "tabulated map is not a homomorphism");
    std::vector<Element> kernel;
    for (Element a = 0; a < hom.images.size(); ++a)
        if (hom.modulo.contains(hom.images[a]))
            kernel.push_back(a);
    return Subgroup::from_members(hom.source, std::move(kernel));
}

std::vector<Element> image_of(const TabulatedHom& hom)
{
    std::vector<Element> image = hom.images;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

} // namespace qrcft

#pragma once

#include "qrcft/groups.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace fixture {

// Symmetric group on k letters; composition (a * b)(x) = a(b(x)), identity id 0.
inline qrcft::GroupPtr symmetric_group(int k)
{
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> c(static_cast<std::size_t>(k));
            for (int x = 0; x < k; ++x)
                c[x] = perms[a][perms[b][x]];
            const auto it = std::find(perms.begin(), perms.end(), c);
            table[a * n + b] = static_cast<std::uint16_t>(it - perms.begin());
        }
    return qrcft::FiniteGroup::from_table(n, std::move(table), 0);
}

// Number of subsets closed under the law and containing the identity (tiny groups only).
inline std::size_t count_subgroups_brute(const qrcft::FiniteGroup& g)
{
    const std::size_t n = g.order();
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (!(mask >> g.identity() & 1))
            continue;
        bool closed = true;
        for (std::size_t a = 0; closed && a < n; ++a)
            for (std::size_t b = 0; closed && b < n; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) &&
                    !(mask >> g.op(static_cast<qrcft::Element>(a), static_cast<qrcft::Element>(b)) & 1))
                    closed = false;
        count += closed;
    }
    return count;
}

// Transfer by the orbit formula: for each orbit of <g> on left cosets with
// representative r and length l, multiply r^-1 g^l r. Returns the raw
// product; callers compare modulo U'.
inline qrcft::Element transfer_by_orbits(const qrcft::Subgroup& u, qrcft::Element g)
{
    const auto& grp = u.group();
    const std::size_t n = grp.order();
    std::vector<int> coset(n, -1);
    std::vector<qrcft::Element> reps;
    for (qrcft::Element x = 0; x < n; ++x) {
        if (coset[x] >= 0)
            continue;
        for (auto h : u.members())
            coset[grp.op(x, h)] = static_cast<int>(reps.size());
        reps.push_back(x);
    }
    std::vector<bool> seen(reps.size(), false);
    qrcft::Element product = grp.identity();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (seen[i])
            continue;
        std::int64_t len = 0;
        qrcft::Element y = reps[i];
        do {
            seen[coset[y]] = true;
            y = grp.op(g, y);
            ++len;
        } while (coset[y] != static_cast<int>(i));
        const auto r = reps[i];
        product = grp.op(product, grp.op(grp.inverse(r), grp.op(grp.power(g, len), r)));
    }
    return product;
}

} // namespace fixture

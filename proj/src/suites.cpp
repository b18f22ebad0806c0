#include "qrcft/suites.hpp"

#include "qrcft/arith.hpp"
#include "qrcft/classfield.hpp"
#include "qrcft/error.hpp"
#include "qrcft/splitting.hpp"
#include "qrcft/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qrcft {

namespace {

std::vector<std::int64_t> odd_primes_up_to(std::int64_t n)
{
    auto primes = primes_up_to(n);
    if (!primes.empty() && primes.front() == 2)
        primes.erase(primes.begin());
    return primes;
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t key)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
    return std::mt19937_64(seq);
}

// Runs fn(i) for each case and merges the partial summaries in index order.
template <class Fn>
CheckSummary sweep(std::string name, std::size_t count, Fn&& fn, const ExecutionConfig& exec)
{
    std::vector<CheckSummary> parts(count);
    for_each_index(count, [&](std::size_t i) { parts[i] = fn(i); }, exec);
    CheckSummary total;
    total.name = std::move(name);
    for (const auto& part : parts)
        total.merge(part);
    return total;
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

} // namespace

void CheckSummary::merge(const CheckSummary& other)
{
    checks += other.checks;
    failures += other.failures;
    if (!counterexample && other.counterexample)
        counterexample = other.counterexample;
}

CheckSummary check_qr_splitting(std::int64_t max_prime, const ExecutionConfig& exec)
{
    const auto primes = odd_primes_up_to(max_prime);
    std::vector<IdealGroupH> squares;
    for (const auto p : primes)
        squares.push_back(squares_group(p));
    return sweep(
        "qr-splitting", primes.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const std::int64_t p = primes[i];
            for (const auto q : primes) {
                if (q == p)
                    continue;
                const auto r = qr_via_splitting(p, q, squares[i]);
                const bool ok = r.equal && r.rhs == legendre_euler(q, p);
                s.record(ok, [&] {
                    return "p=" + str(p) + " q=" + str(q) + ": (p*/q)=" + str(r.lhs) + " split-law=" + str(r.rhs);
                });
            }
            return s;
        },
        exec);
}

CheckSummary check_qr_transfer(std::int64_t max_p, std::int64_t max_q, const ExecutionConfig& exec)
{
    const auto ps = odd_primes_up_to(max_p);
    const auto qs = odd_primes_up_to(max_q);
    std::vector<SignTransferContext> contexts;
    for (const auto p : ps)
        contexts.push_back(SignTransferContext::make(p));
    return sweep(
        "qr-transfer", ps.size(),
        [&](std::size_t i) {
            CheckSummary s;
            for (const auto q : qs) {
                if (q == ps[i])
                    continue;
                const auto r = qr_via_transfer(contexts[i], q);
                s.record(r.equal, [&] {
                    return "p=" + str(ps[i]) + " q=" + str(q) + ": (p*/q)=" + str(r.lhs) + " V(q)=" + str(r.rhs);
                });
            }
            return s;
        },
        exec);
}

CheckSummary check_spl_agreement(std::int64_t max_p, std::int64_t max_q, const ExecutionConfig& exec)
{
    const auto ps = odd_primes_up_to(max_p);
    const auto qs = primes_up_to(max_q);
    std::vector<SignTransferContext> contexts;
    for (const auto p : ps)
        contexts.push_back(SignTransferContext::make(p));
    return sweep(
        "spl-agreement", ps.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const std::int64_t p = ps[i];
            const FieldDescriptor field = QuadraticField{FundamentalDiscriminant::make(pstar(p))};
            const auto spl = spl_set(field, max_q);
            const std::set<std::int64_t> split(spl.begin(), spl.end());
            for (const auto q : qs) {
                if (q == p)
                    continue;
                const bool by_kronecker = split.contains(q);
                const bool by_transfer = contexts[i].value(q) == 1;
                const bool by_legendre = legendre_brute(q, p) == 1;
                s.record(by_kronecker == by_transfer && by_transfer == by_legendre, [&] {
                    return "p=" + str(p) + " q=" + str(q) + ": spl=" + str(by_kronecker) +
                           " kerV=" + str(by_transfer) + " legendre=" + str(by_legendre);
                });
            }
            return s;
        },
        exec);
}

CheckSummary check_symbol_routes(std::int64_t max_p, int random_half_systems, std::uint64_t seed,
                                 const ExecutionConfig& exec)
{
    const auto primes = odd_primes_up_to(max_p);
    return sweep(
        "symbol-routes", primes.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const std::int64_t p = primes[i];
            auto rng = case_rng(seed, static_cast<std::uint64_t>(p));
            std::vector<HalfSystem> systems{default_half_system(p)};
            for (int k = 0; k < random_half_systems; ++k)
                systems.push_back(random_half_system(p, rng));
            for (std::int64_t a = 1; a < p; ++a) {
                const int brute = legendre_brute(a, p);
                const int euler = legendre_euler(a, p);
                bool ok = brute == euler;
                std::string where;
                for (std::size_t k = 0; ok && k < systems.size(); ++k) {
                    const auto g = gauss_lemma(a, p, systems[k]);
                    const auto& elems = systems[k].elements();
                    std::vector<bool> hit(elems.size(), false);
                    for (const auto& row : g.trace.rows) {
                        const std::int64_t rhs = mod(row.sign * elems[row.target], p);
                        ok = ok && mod(a * elems[row.j], p) == rhs && !hit[row.target];
                        hit[row.target] = true;
                    }
                    ok = ok && g.value == brute;
                    if (!ok)
                        where = " half-system #" + std::to_string(k) + " gauss=" + str(g.value);
                }
                s.record(ok, [&] {
                    return "p=" + str(p) + " a=" + str(a) + ": brute=" + str(brute) + " euler=" + str(euler) + where;
                });
            }
            return s;
        },
        exec);
}

CheckSummary check_gauss_transfer_bridge(std::int64_t max_p, int random_half_systems, std::uint64_t seed,
                                         const ExecutionConfig& exec)
{
    const auto primes = odd_primes_up_to(max_p);
    return sweep(
        "gauss-transfer-bridge", primes.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const std::int64_t p = primes[i];
            auto rng = case_rng(seed ^ 0xb41d6e, static_cast<std::uint64_t>(p));
            std::vector<HalfSystem> systems{default_half_system(p)};
            for (int k = 0; k < random_half_systems; ++k)
                systems.push_back(random_half_system(p, rng));
            for (std::int64_t a = 1; a < p; ++a)
                for (std::size_t k = 0; k < systems.size(); ++k) {
                    const auto r = gauss_lemma_is_transfer(p, a, systems[k]);
                    s.record(r.ok(), [&] {
                        return "p=" + str(p) + " a=" + str(a) + " half-system #" + std::to_string(k) +
                               ": transfer=" + str(r.transfer_value) + " gauss=" + str(r.gauss.value);
                    });
                }
            return s;
        },
        exec);
}

std::vector<CorpusGroup> abelian_corpus(const CorpusOptions& options)
{
    std::vector<CorpusGroup> corpus;
    for (std::int64_t m = 2; m <= options.max_unit_modulus; ++m)
        corpus.push_back({"(Z/" + str(m) + ")^x", group_from_unit_residues(m)});
    for (std::size_t n = 1; n <= options.max_cyclic_order; ++n)
        corpus.push_back({"Z/" + std::to_string(n), cyclic_group(n)});

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> factor_count(2, 3);
    std::uniform_int_distribution<std::size_t> factor_order(2, 32);
    std::size_t made = 0;
    while (made < options.random_products) {
        const std::size_t k = factor_count(rng);
        std::vector<std::size_t> orders;
        std::size_t total = 1;
        for (std::size_t j = 0; j < k; ++j) {
            orders.push_back(factor_order(rng));
            total *= orders.back();
        }
        if (total > options.max_product_order)
            continue;
        GroupPtr g = cyclic_group(orders.front());
        std::string name = "Z/" + std::to_string(orders.front());
        for (std::size_t j = 1; j < k; ++j) {
            g = direct_product(g, cyclic_group(orders[j]));
            name += " x Z/" + std::to_string(orders[j]);
        }
        corpus.push_back({std::move(name), std::move(g)});
        ++made;
    }
    return corpus;
}

std::vector<TransferCase> cyclic_quotient_cases(const std::vector<CorpusGroup>& corpus, const ExecutionConfig& exec)
{
    std::vector<std::vector<TransferCase>> per_group(corpus.size());
    for_each_index(
        corpus.size(),
        [&](std::size_t i) {
            const auto subgroups = all_subgroups(corpus[i].group);
            for (std::size_t k = 0; k < subgroups.size(); ++k)
                if (quotient_is_cyclic(subgroups[k]))
                    per_group[i].push_back(
                        {corpus[i].name + " / U#" + std::to_string(k) + " (|U|=" +
                             std::to_string(subgroups[k].order()) + ")",
                         subgroups[k]});
        },
        exec);
    std::vector<TransferCase> cases;
    for (auto& group_cases : per_group)
        for (auto& c : group_cases)
            cases.push_back(std::move(c));
    return cases;
}

CheckSummary check_transfer_power_law(const std::vector<TransferCase>& cases, const ExecutionConfig& exec)
{
    return sweep(
        "transfer-power-law", cases.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const Subgroup& u = cases[i].u;
            const FiniteGroup& g = u.group();
            const auto f = static_cast<std::int64_t>(u.index());
            const auto hom = transfer_homomorphism(u);
            for (Element x = 0; x < g.order(); ++x)
                s.record(hom.images[x] == g.power(x, f), [&] {
                    return cases[i].name + ": V(" + str(g.label(x)) + ")=" + str(g.label(hom.images[x])) +
                           " but x^" + str(f) + "=" + str(g.label(g.power(x, f)));
                });
            return s;
        },
        exec);
}

CheckSummary check_transfer_rep_independence(const std::vector<TransferCase>& cases, int choices, std::uint64_t seed,
                                             const ExecutionConfig& exec)
{
    return sweep(
        "transfer-rep-independence", cases.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const Subgroup& u = cases[i].u;
            const FiniteGroup& g = u.group();
            const auto canonical = transfer_homomorphism(u);
            auto rng = case_rng(seed, i);
            for (int k = 0; k < choices; ++k) {
                const auto dec = random_coset_decomposition(u, rng);
                bool ok = true;
                Element bad = 0;
                for (Element x = 0; ok && x < g.order(); ++x) {
                    ok = transfer(dec, x, canonical.modulo).value == canonical.images[x];
                    bad = x;
                }
                s.record(ok, [&] {
                    return cases[i].name + ": rep choice #" + std::to_string(k) + " changes V(" + str(g.label(bad)) +
                           ")";
                });
            }
            return s;
        },
        exec);
}

CheckSummary check_transfer_homomorphism(const std::vector<TransferCase>& cases, std::size_t max_order,
                                         const ExecutionConfig& exec)
{
    return sweep(
        "transfer-homomorphism", cases.size(),
        [&](std::size_t i) {
            CheckSummary s;
            if (cases[i].u.group().order() > max_order)
                return s;
            s.record(is_homomorphism(transfer_homomorphism(cases[i].u)),
                     [&] { return cases[i].name + ": V(gh) != V(g)V(h) for some pair"; });
            return s;
        },
        exec);
}

CheckSummary check_transfer_surjective_cyclic(std::size_t max_order, const ExecutionConfig& exec)
{
    return sweep(
        "transfer-surjective-cyclic", max_order,
        [&](std::size_t i) {
            CheckSummary s;
            const std::size_t n = i + 1;
            const auto g = cyclic_group(n);
            const auto subgroups = all_subgroups(g);
            s.record(subgroups.size() == divisors(n).size(),
                     [&] { return "Z/" + std::to_string(n) + " has " + std::to_string(subgroups.size()) + " subgroups"; });
            for (const auto& u : subgroups)
                s.record(image_of(transfer_homomorphism(u)) == u.members(), [&] {
                    return "Z/" + std::to_string(n) + ": transfer onto subgroup of order " +
                           std::to_string(u.order()) + " is not surjective";
                });
            return s;
        },
        exec);
}

CheckSummary check_klein_four_trivial()
{
    CheckSummary s;
    s.name = "klein-four-trivial";
    const std::vector<CorpusGroup> kleins{{"Z/2 x Z/2", direct_product(cyclic_group(2), cyclic_group(2))},
                                          {"(Z/8)^x", group_from_unit_residues(8)}};
    for (const auto& [name, g] : kleins) {
        s.record(g->order() == 4 && g->is_abelian(), [&] { return name + " is not of order 4"; });
        for (Element x = 0; x < g->order(); ++x)
            s.record(g->power(x, 2) == g->identity(), [&] { return name + " has an element of order 4"; });
        for (const auto& u : all_subgroups(g)) {
            if (u.order() != 2)
                continue;
            const auto hom = transfer_homomorphism(u);
            for (Element x = 0; x < g->order(); ++x)
                s.record(hom.images[x] == g->identity(), [&] {
                    return name + ": V(" + str(g->label(x)) + ") = " + str(g->label(hom.images[x])) +
                           " into order-2 subgroup";
                });
        }
    }
    return s;
}

CheckSummary check_euler_formulation(std::int64_t max_abs_d, std::int64_t prime_bound, const ExecutionConfig& exec)
{
    const auto ds = fundamental_discriminants(max_abs_d);
    return sweep(
        "euler-formulation", ds.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const auto report = artin_class_constancy_check(ds[i], prime_bound);
            for (const auto& c : report.classes)
                s.record(c.value == kronecker(ds[i].value(), c.label) &&
                             !(report.counterexample && report.counterexample->label == c.label),
                         [&] {
                             std::string msg = "d=" + str(ds[i].value()) + " class " + str(c.label);
                             if (report.counterexample)
                                 msg += ": (d/" + str(report.counterexample->p) + ")=" +
                                        str(report.counterexample->value_p) + " but (d/" +
                                        str(report.counterexample->q) + ")=" + str(report.counterexample->value_q);
                             return msg;
                         });
            return s;
        },
        exec);
}

CheckSummary check_takagi_index(std::int64_t max_abs_d)
{
    CheckSummary s;
    s.name = "takagi-index";
    for (const auto& d : fundamental_discriminants(max_abs_d)) {
        const auto h = takagi_group_quadratic(d);
        const auto ineq = first_inequality_check(h, 2);
        s.record(index(h) == 2 && ineq.holds && ineq.divides, [&] {
            return "d=" + str(d.value()) + ": index " + std::to_string(index(h));
        });
    }
    return s;
}

CheckSummary check_takagi_witness(std::int64_t max_a, std::int64_t max_abs_d, std::int64_t prime_bound,
                                  const ExecutionConfig& exec)
{
    const auto ds = fundamental_discriminants(max_abs_d);
    return sweep(
        "takagi-witness", ds.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const auto& d = ds[i];
            for (std::int64_t a = 1; a <= max_a; ++a) {
                if (std::gcd(a, d.abs()) != 1)
                    continue;
                const int chi = kronecker(d.value(), a);
                bool ok = false;
                std::string detail;
                try {
                    const auto w = takagi_witness(a, d, prime_bound);
                    ok = chi == 1 && verify_takagi_witness(w, prime_bound);
                    detail = "witness returned";
                } catch (const Error& e) {
                    ok = chi == -1 && e.code() == Errc::not_in_takagi_group;
                    detail = e.what();
                }
                s.record(ok, [&] {
                    return "a=" + str(a) + " d=" + str(d.value()) + " (d/a)=" + str(chi) + ": " + detail;
                });
            }
            return s;
        },
        exec);
}

CheckSummary check_conductor(std::int64_t max_abs_d, const ExecutionConfig& exec)
{
    const auto ds = fundamental_discriminants(max_abs_d);
    return sweep(
        "conductor", ds.size(),
        [&](std::size_t i) {
            CheckSummary s;
            const Modulus got = conductor_quadratic(ds[i]);
            s.record(got == ds[i].modulus(), [&] {
                return "d=" + str(ds[i].value()) + ": conductor " + got.to_string() + ", expected " +
                       ds[i].modulus().to_string();
            });
            return s;
        },
        exec);
}

CheckSummary check_cyclotomic_bookkeeping(std::int64_t max_q, std::int64_t max_m, const ExecutionConfig& exec)
{
    const auto qs = primes_up_to(max_q);
    const std::size_t count = max_m >= 3 ? static_cast<std::size_t>(max_m - 2) : 0;
    return sweep(
        "cyclotomic-bookkeeping", count,
        [&](std::size_t i) {
            CheckSummary s;
            const auto m = static_cast<std::int64_t>(i) + 3;
            const std::uint64_t phi = euler_phi(static_cast<std::uint64_t>(m));
            const auto takagi = takagi_group_cyclotomic(m);
            const auto ineq = first_inequality_check(takagi, phi);
            s.record(index(takagi) == phi && ineq.holds && ineq.divides,
                     [&] { return "m=" + str(m) + ": Takagi index " + std::to_string(index(takagi)); });
            for (const auto q : qs) {
                const auto t = splitting_cyclotomic(q, m);
                bool ok = t.degree() == phi;
                if (ok && m % q != 0)
                    ok = t.e == 1 && t.f == artin_symbol_cyclotomic(q, takagi.parent).order();
                s.record(ok, [&] {
                    return "m=" + str(m) + " q=" + str(q) + ": (e,f,g)=(" + std::to_string(t.e) + "," +
                           std::to_string(t.f) + "," + std::to_string(t.g) + ")";
                });
            }
            return s;
        },
        exec);
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"qr-splitting",      "qr-transfer", "gauss-lemma",
                                                "transfer-props",    "euler-formulation",
                                                "takagi",            "indices",     "conductor"};
    return names;
}

std::vector<CheckSummary> run_suite(std::string_view name, const SuiteOptions& options)
{
    const auto& exec = options.exec;
    const auto cap = [&](std::int64_t fallback) { return options.max_prime.value_or(fallback); };
    const auto capped = [&](std::int64_t limit, std::int64_t fallback) { return std::min(limit, cap(fallback)); };

    if (name == "all") {
        std::vector<CheckSummary> all;
        for (const auto& suite : suite_names())
            for (auto& s : run_suite(suite, options))
                all.push_back(std::move(s));
        return all;
    }
    if (name == "qr-splitting")
        return {check_qr_splitting(cap(541), exec)};
    if (name == "qr-transfer")
        return {check_qr_transfer(capped(101, 541), cap(541), exec),
                check_spl_agreement(capped(61, 2000), cap(2000), exec)};
    if (name == "gauss-lemma")
        return {check_symbol_routes(cap(211), 20, options.seed, exec),
                check_gauss_transfer_bridge(capped(101, 101), 10, options.seed, exec)};
    if (name == "transfer-props") {
        const auto cases = cyclic_quotient_cases(abelian_corpus({.seed = options.seed}), exec);
        return {check_transfer_power_law(cases, exec), check_transfer_rep_independence(cases, 50, options.seed, exec),
                check_transfer_homomorphism(cases, 100, exec), check_transfer_surjective_cyclic(256, exec),
                check_klein_four_trivial()};
    }
    if (name == "euler-formulation")
        return {check_euler_formulation(101, cap(5000), exec)};
    if (name == "takagi")
        return {check_takagi_index(101), check_takagi_witness(300, 60, 10000, exec)};
    if (name == "indices")
        return {check_cyclotomic_bookkeeping(cap(500), 100, exec)};
    if (name == "conductor")
        return {check_conductor(100, exec)};
    fail(Errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

} // namespace qrcft

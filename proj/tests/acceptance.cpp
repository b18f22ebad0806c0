// Acceptance gate: each criterion runs at full bounds and prints one line.
#include "oracles.hpp"

#include "qrcft/classfield.hpp"
#include "qrcft/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

using namespace qrcft;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::optional<double> time_limit_s;
    std::function<std::vector<CheckSummary>()> run;
};

CheckSummary conductor_vs_oracle(std::int64_t max_abs_d)
{
    CheckSummary s;
    s.name = "conductor-oracle";
    for (const auto& d : fundamental_discriminants(max_abs_d)) {
        const auto [f, inf] = oracle::conductor_search(d.value());
        const auto got = conductor_quadratic(d);
        s.record(got == Modulus{f, inf} && f == d.abs() && inf == (d.value() < 0),
                 [&] { return "d=" + std::to_string(d.value()) + ": " + got.to_string(); });
    }
    return s;
}

} // namespace

int main()
{
    const ExecutionConfig exec{};
    std::vector<TransferCase> cases;
    const auto corpus_cases = [&]() -> const std::vector<TransferCase>& {
        if (cases.empty())
            cases = cyclic_quotient_cases(abelian_corpus(), exec);
        return cases;
    };

    const std::vector<Criterion> criteria{
        {1, "reciprocity via splitting, p,q <= 541", 10.0, [&] { return std::vector{check_qr_splitting(541, exec)}; }},
        {2, "reciprocity via transfer, p <= 101, q <= 541", 30.0,
         [&] { return std::vector{check_qr_transfer(101, 541, exec)}; }},
        {3, "brute = Euler = Gauss Lemma, p <= 211, 20 half-systems", std::nullopt,
         [&] { return std::vector{check_symbol_routes(211, 20, kDefaultSeed, exec)}; }},
        {4, "transfer is x -> x^f on the abelian corpus", std::nullopt,
         [&] { return std::vector{check_transfer_power_law(corpus_cases(), exec)}; }},
        {5, "transfer rep independence (50) and homomorphism (order <= 100)", std::nullopt,
         [&] {
             return std::vector{check_transfer_rep_independence(corpus_cases(), 50, kDefaultSeed, exec),
                                check_transfer_homomorphism(corpus_cases(), 100, exec)};
         }},
        {6, "transfer onto for cyclic groups <= 256, trivial on Klein four", std::nullopt,
         [&] { return std::vector{check_transfer_surjective_cyclic(256, exec), check_klein_four_trivial()}; }},
        {7, "three descriptions of Spl(Q(sqrt p*)), p <= 61, q <= 2000", std::nullopt,
         [&] { return std::vector{check_spl_agreement(61, 2000, exec)}; }},
        {8, "Kronecker symbol constant on ray classes, |d| <= 101, p <= 5000", std::nullopt,
         [&] { return std::vector{check_euler_formulation(101, 5000, exec)}; }},
        {9, "quadratic Takagi index 2 and witnesses, a <= 300, |d| <= 60", 60.0,
         [&] { return std::vector{check_takagi_index(101), check_takagi_witness(300, 60, 10000, exec)}; }},
        {10, "conductor is |d| with the real place iff d < 0, |d| <= 100", std::nullopt,
         [&] { return std::vector{check_conductor(100, exec), conductor_vs_oracle(100)}; }},
        {11, "e f g = phi(m) for q <= 500, m <= 100; cyclotomic Takagi index", std::nullopt,
         [&] { return std::vector{check_cyclotomic_bookkeeping(500, 100, exec)}; }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto summaries = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::uint64_t checks = 0;
        const CheckSummary* bad = nullptr;
        for (const auto& s : summaries) {
            checks += s.checks;
            if (!s.passed() && !bad)
                bad = &s;
        }
        const bool in_time = !c.time_limit_s || secs < *c.time_limit_s;
        const bool ok = !bad && in_time && checks > 0;
        failed += !ok;
        std::printf("%s  criterion %2d  %-66s checks=%-7llu %.2fs", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    static_cast<unsigned long long>(checks), secs);
        if (bad)
            std::printf("  [%s: %s]", bad->name.c_str(), bad->counterexample.value_or("").c_str());
        else if (!in_time)
            std::printf("  [over %.0fs limit]", *c.time_limit_s);
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

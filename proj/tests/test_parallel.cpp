#include "qrcft/error.hpp"
#include "qrcft/parallel.hpp"
#include "qrcft/suites.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qrcft;

namespace {

const ExecutionConfig kSerial{Execution::serial, 0};

std::vector<ExecutionConfig> parallel_configs()
{
    return {{Execution::parallel, 1}, {Execution::parallel, 2}, {Execution::parallel, 4}, {Execution::parallel, 0}};
}

} // namespace

TEST_CASE("every index is visited exactly once")
{
    for (std::size_t n : {0, 1, 7, 1000}) {
        for (int threads : {1, 2, 4}) {
            std::vector<std::atomic<int>> hits(n);
            for_each_index_parallel(n, [&](std::size_t i) { hits[i].fetch_add(1); }, threads);
            for (std::size_t i = 0; i < n; ++i)
                REQUIRE(hits[i].load() == 1);
        }
        std::vector<int> order;
        for_each_index_serial(n, [&](std::size_t i) { order.push_back(static_cast<int>(i)); });
        REQUIRE(order.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE(order[i] == static_cast<int>(i));
    }
    CHECK(available_threads() >= 1);
}

TEST_CASE("the lowest-index exception is rethrown")
{
    for (int threads : {1, 2, 4}) {
        try {
            for_each_index_parallel(
                200,
                [](std::size_t i) {
                    if (i % 37 == 5)
                        throw std::runtime_error(std::to_string(i));
                },
                threads);
            FAIL("no exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "5");
        }
    }
    CHECK_THROWS_AS(for_each_index(3, [](std::size_t) { fail(Errc::internal_error, "x"); }, kSerial), Error);
}

TEST_CASE("prime sweeps agree between serial and parallel runs")
{
    const auto ref = std::vector<CheckSummary>{
        check_qr_splitting(97, kSerial),         check_qr_transfer(61, 151, kSerial),
        check_spl_agreement(31, 400, kSerial),   check_symbol_routes(61, 4, 17, kSerial),
        check_gauss_transfer_bridge(41, 3, 17, kSerial), check_euler_formulation(40, 500, kSerial),
        check_takagi_witness(40, 24, 2000, kSerial),     check_conductor(60, kSerial),
        check_cyclotomic_bookkeeping(120, 30, kSerial),
    };
    for (const auto& s : ref) {
        CHECK(s.passed());
        CHECK(s.checks > 0);
    }
    for (const auto& exec : parallel_configs()) {
        CAPTURE(exec.threads);
        const auto got = std::vector<CheckSummary>{
            check_qr_splitting(97, exec),         check_qr_transfer(61, 151, exec),
            check_spl_agreement(31, 400, exec),   check_symbol_routes(61, 4, 17, exec),
            check_gauss_transfer_bridge(41, 3, 17, exec), check_euler_formulation(40, 500, exec),
            check_takagi_witness(40, 24, 2000, exec),     check_conductor(60, exec),
            check_cyclotomic_bookkeeping(120, 30, exec),
        };
        CHECK(got == ref);
    }
}

TEST_CASE("transfer sweeps agree between serial and parallel runs")
{
    CorpusOptions small;
    small.max_unit_modulus = 40;
    small.max_cyclic_order = 24;
    small.random_products = 10;
    small.max_product_order = 64;
    const auto corpus = abelian_corpus(small);
    const auto cases = cyclic_quotient_cases(corpus, kSerial);
    CHECK(cases.size() > corpus.size());

    const auto ref = std::vector<CheckSummary>{
        check_transfer_power_law(cases, kSerial),
        check_transfer_rep_independence(cases, 5, 3, kSerial),
        check_transfer_homomorphism(cases, 48, kSerial),
        check_transfer_surjective_cyclic(40, kSerial),
    };
    for (const auto& s : ref)
        CHECK(s.passed());
    for (const auto& exec : parallel_configs()) {
        const auto pcases = cyclic_quotient_cases(corpus, exec);
        REQUIRE(pcases.size() == cases.size());
        for (std::size_t i = 0; i < cases.size(); ++i) {
            REQUIRE(pcases[i].name == cases[i].name);
            REQUIRE(pcases[i].u.members() == cases[i].u.members());
        }
        const auto got = std::vector<CheckSummary>{
            check_transfer_power_law(cases, exec),
            check_transfer_rep_independence(cases, 5, 3, exec),
            check_transfer_homomorphism(cases, 48, exec),
            check_transfer_surjective_cyclic(40, exec),
        };
        CHECK(got == ref);
    }
}

TEST_CASE("corpus is reproducible from its seed")
{
    CorpusOptions o;
    o.max_unit_modulus = 10;
    o.max_cyclic_order = 4;
    o.random_products = 8;
    const auto a = abelian_corpus(o);
    const auto b = abelian_corpus(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].group->order() == b[i].group->order());
    }
    o.seed = 12345;
    const auto c = abelian_corpus(o);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs = differs || a[i].name != c[i].name;
    CHECK(differs);
}

TEST_CASE("run_suite names")
{
    CHECK(suite_names().size() == 8);
    CHECK_THROWS_AS(run_suite("nope", {}), Error);
    SuiteOptions o;
    o.max_prime = 30;
    o.exec = kSerial;
    const auto serial = run_suite("qr-splitting", o);
    o.exec = {Execution::parallel, 2};
    CHECK(run_suite("qr-splitting", o) == serial);
    REQUIRE(serial.size() == 1);
    CHECK(serial[0].passed());
}

TEST_CASE("a failing check reports the first counterexample in input order")
{
    CheckSummary s;
    s.name = "x";
    s.record(true, [] { return std::string("a"); });
    s.record(false, [] { return std::string("b"); });
    s.record(false, [] { return std::string("c"); });
    CHECK(s.checks == 3);
    CHECK(s.failures == 2);
    CHECK(s.counterexample == "b");
    CheckSummary t;
    t.record(false, [] { return std::string("d"); });
    CheckSummary merged = s;
    merged.merge(t);
    CHECK(merged.checks == 4);
    CHECK(merged.failures == 3);
    CHECK(merged.counterexample == "b");
}

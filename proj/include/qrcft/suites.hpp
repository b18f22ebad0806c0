#pragma once

#include "qrcft/groups.hpp"
#include "qrcft/parallel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Exhaustive verification sweeps. Each check returns a summary whose
// counterexample is the first failure in input order, so serial and
// parallel runs agree exactly.
namespace qrcft {

struct CheckSummary {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return failures == 0; }

    template <class Describe>
    void record(bool ok, Describe&& describe)
    {
        ++checks;
        if (!ok) {
            ++failures;
            if (!counterexample)
                counterexample = describe();
        }
    }

    void merge(const CheckSummary& other);

    friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'cf7'0001ULL;

CheckSummary check_qr_splitting(std::int64_t max_prime, const ExecutionConfig& exec = {});
CheckSummary check_qr_transfer(std::int64_t max_p, std::int64_t max_q, const ExecutionConfig& exec = {});
CheckSummary check_spl_agreement(std::int64_t max_p, std::int64_t max_q, const ExecutionConfig& exec = {});
CheckSummary check_symbol_routes(std::int64_t max_p, int random_half_systems, std::uint64_t seed = kDefaultSeed,
                                 const ExecutionConfig& exec = {});
CheckSummary check_gauss_transfer_bridge(std::int64_t max_p, int random_half_systems,
                                         std::uint64_t seed = kDefaultSeed, const ExecutionConfig& exec = {});

struct CorpusGroup {
    std::string name;
    GroupPtr group;
};

struct CorpusOptions {
    std::int64_t max_unit_modulus = 120;
    std::size_t max_cyclic_order = 64;
    std::size_t random_products = 50;
    std::size_t max_product_order = 256;
    std::uint64_t seed = kDefaultSeed;
};

// Unit groups mod 2..max_unit_modulus, cyclic groups 1..max_cyclic_order and
// random direct products of two or three cyclic factors.
std::vector<CorpusGroup> abelian_corpus(const CorpusOptions& options = {});

struct TransferCase {
    std::string name;
    Subgroup u;
};

// Every subgroup U with G / U cyclic, for every corpus group.
std::vector<TransferCase> cyclic_quotient_cases(const std::vector<CorpusGroup>& corpus,
                                                const ExecutionConfig& exec = {});

CheckSummary check_transfer_power_law(const std::vector<TransferCase>& cases, const ExecutionConfig& exec = {});
CheckSummary check_transfer_rep_independence(const std::vector<TransferCase>& cases, int choices,
                                             std::uint64_t seed = kDefaultSeed, const ExecutionConfig& exec = {});
CheckSummary check_transfer_homomorphism(const std::vector<TransferCase>& cases, std::size_t max_order,
                                         const ExecutionConfig& exec = {});
CheckSummary check_transfer_surjective_cyclic(std::size_t max_order, const ExecutionConfig& exec = {});
CheckSummary check_klein_four_trivial();

CheckSummary check_euler_formulation(std::int64_t max_abs_d, std::int64_t prime_bound,
                                     const ExecutionConfig& exec = {});
CheckSummary check_takagi_index(std::int64_t max_abs_d);
CheckSummary check_takagi_witness(std::int64_t max_a, std::int64_t max_abs_d, std::int64_t prime_bound,
                                  const ExecutionConfig& exec = {});
CheckSummary check_conductor(std::int64_t max_abs_d, const ExecutionConfig& exec = {});
CheckSummary check_cyclotomic_bookkeeping(std::int64_t max_q, std::int64_t max_m, const ExecutionConfig& exec = {});

struct SuiteOptions {
    // Caps the prime range of prime-indexed sweeps; suites without one ignore it.
    std::optional<std::int64_t> max_prime;
    ExecutionConfig exec;
    std::uint64_t seed = kDefaultSeed;
};

// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

// Throws invalid_argument for an unknown suite. "all" runs every suite in order.
std::vector<CheckSummary> run_suite(std::string_view name, const SuiteOptions& options);

} // namespace qrcft

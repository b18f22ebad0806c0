#pragma once

#include <cstddef>
#include <functional>

// Index-space kernels for the verification sweeps. The serial loop is the
// reference; the OpenMP loop must produce identical merged results.
namespace qrcft {

enum class Execution { serial, parallel };

struct ExecutionConfig {
    Execution mode = Execution::parallel;
    int threads = 0; // 0: OpenMP default
};

int available_threads();

void for_each_index_serial(std::size_t count, const std::function<void(std::size_t)>& body);

// Dynamic schedule; the exception thrown at the lowest index, if any, is rethrown after the loop.
void for_each_index_parallel(std::size_t count, const std::function<void(std::size_t)>& body, int threads = 0);

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, const ExecutionConfig& exec);

} // namespace qrcft

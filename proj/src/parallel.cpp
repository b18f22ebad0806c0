#include "qrcft/parallel.hpp"

#include <exception>
#include <limits>

#include <omp.h>

namespace qrcft {

int available_threads()
{
    return omp_get_max_threads();
}

void for_each_index_serial(std::size_t count, const std::function<void(std::size_t)>& body)
{
    for (std::size_t i = 0; i < count; ++i)
        body(i);
}

void for_each_index_parallel(std::size_t count, const std::function<void(std::size_t)>& body, int threads)
{
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr first_error;
    std::size_t first_index = std::numeric_limits<std::size_t>::max();
    const auto n = static_cast<long long>(count);

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(qrcft_for_each_error)
            {
                if (static_cast<std::size_t>(i) < first_index) {
                    first_index = static_cast<std::size_t>(i);
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, const ExecutionConfig& exec)
{
    if (exec.mode == Execution::serial)
        for_each_index_serial(count, body);
    else
        for_each_index_parallel(count, body, exec.threads);
}

} // namespace qrcft

#pragma once
#include <exception>
#include <mutex>

namespace rmlab::kernels {

// Every data-parallel kernel takes an Exec switch: Serial is the reference
// path used by the tests, Parallel the OpenMP path used in production.
// Parallel results are deterministic: work is split by index (or by a fixed
// chunk count), never by thread id.
enum class Exec { Serial, Parallel };

// Indexed parallel-for with exception transport out of the OpenMP region.
template <class F>
void for_each_index(int n, Exec exec, F&& f) {
    if (exec == Exec::Parallel && n > 1) {
        std::exception_ptr err;
        std::mutex err_mutex;
#pragma omp parallel for schedule(guided)
        for (int i = 0; i < n; ++i) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (int i = 0; i < n; ++i) f(i);
    }
}

} // namespace rmlab::kernels

#pragma once

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gmf {

// Fan a table of independent cells across threads. Each cell writes only to
// its own index, so the gathered output is identical to the serial path no
// matter the completion order; tests compare the two paths bit for bit.
template <typename F>
void table_map(int n, bool parallel, F&& fn) {
#ifdef _OPENMP
    if (parallel && n > 1) {
        std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                fn(i);
            } catch (...) {
#pragma omp critical(gmf_table_map_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#endif
    (void)parallel;
    for (int i = 0; i < n; ++i) fn(i);
}

} // namespace gmf

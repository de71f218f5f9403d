#pragma once

#include <cstddef>
#include <functional>

namespace drc {

/// Worker bound for parallel loops; 0 restores the default (hardware threads).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index is run exactly once; callers write
/// results into slot i so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace drc

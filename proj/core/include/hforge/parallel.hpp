#pragma once

#include <cstddef>
#include <functional>

namespace hforge {

/// Static-chunked parallel for over [0, n). With per-sample RNG streams the
/// result is independent of the thread count. threads <= 0 picks hardware.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

int default_thread_count();

}  // namespace hforge

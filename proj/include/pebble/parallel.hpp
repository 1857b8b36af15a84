#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#include <omp.h>

namespace pebble {

/// Worker count for `--jobs 0`.
inline int available_parallelism() { return omp_get_num_procs(); }

/// Runs fn(worker, chunk) for every chunk in [0, chunks) over `jobs` OpenMP
/// threads. Each thread builds one worker with make_worker(). Chunks are
/// handed out dynamically, so fn must write only to chunk-indexed storage.
/// The first exception thrown by any chunk is rethrown on the caller.
template <class MakeWorker, class Fn>
void for_each_chunk(std::uint64_t chunks, int jobs, MakeWorker&& make_worker, Fn&& fn) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int threads = jobs > 0 ? jobs : available_parallelism();
  const auto count = static_cast<long long>(chunks);
#pragma omp parallel num_threads(threads)
  {
    std::optional<decltype(make_worker())> worker;
    try {
      worker.emplace(make_worker());
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
#pragma omp for schedule(dynamic, 1)
    for (long long c = 0; c < count; ++c) {
      if (!worker) {
        continue;
      }
      try {
        fn(*worker, static_cast<std::uint64_t>(c));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

} // namespace pebble

#pragma once

// Deterministic chunked Monte Carlo driver.
//
// Samples are cut into fixed-size chunks; chunk c always draws from
// RngStream(seed, c). Workers pull chunks from a shared counter and fill
// private partial results, which are merged in chunk order once every worker
// has finished. The merged result therefore depends on (seed, samples,
// chunk_size) only, never on the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "entpow/errors.hpp"
#include "entpow/random.hpp"

namespace entpow {

struct SamplingPlan {
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  unsigned workers = 1;
  std::uint64_t chunk_size = 4096;

  std::uint64_t chunk_count() const { return (samples + chunk_size - 1) / chunk_size; }
  std::uint64_t chunk_samples(std::uint64_t chunk) const {
    return std::min(chunk_size, samples - chunk * chunk_size);
  }
};

/// Partial must be copyable and provide merge(const Partial&). The kernel is
/// called as kernel(RngStream&, std::uint64_t count, Partial&).
template <class Partial, class Kernel>
Partial run_chunked(const SamplingPlan& plan, const Partial& prototype, Kernel&& kernel) {
  if (plan.samples == 0) throw OutOfRange("run_chunked: samples must be >= 1");
  if (plan.workers == 0) throw OutOfRange("run_chunked: workers must be >= 1");
  if (plan.chunk_size == 0) throw OutOfRange("run_chunked: chunk_size must be >= 1");

  const std::uint64_t n_chunks = plan.chunk_count();
  std::vector<Partial> partials(n_chunks, prototype);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        RngStream rng(plan.seed, c);
        kernel(rng, plan.chunk_samples(c), partials[c]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(plan.workers, n_chunks));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  Partial merged = prototype;
  for (const auto& p : partials) merged.merge(p);
  return merged;
}

}  // namespace entpow

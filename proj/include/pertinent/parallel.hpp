#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pertinent {

inline constexpr const char* kWorkersEnv = "PERTINENT_WORKERS";

struct ParallelOptions {
  unsigned workers = 0;     // 0: PERTINENT_WORKERS, else hardware concurrency
  unsigned split_bits = 0;  // 0: derived from the worker count
};

inline unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline unsigned resolve_workers(const ParallelOptions& opt) {
  return opt.workers ? opt.workers : default_workers();
}

// Number of top counter bits to split a 2^total_bits range on.
inline unsigned resolve_split_bits(const ParallelOptions& opt, unsigned total_bits) {
  unsigned bits = opt.split_bits;
  if (bits == 0) {
    const unsigned workers = resolve_workers(opt);
    while (bits < 16 && (1u << bits) < 8 * workers) ++bits;
  }
  return std::min(bits, total_bits);
}

/// Runs body(chunk, partial) for every chunk in [0, chunks), spread across
/// workers. Each worker owns a partial count vector of the given width; the
/// partials are summed elementwise, so the result does not depend on the
/// scheduling or the worker count.
template <class Body>
std::vector<std::uint64_t> parallel_count(std::uint64_t chunks, std::size_t width, unsigned workers, Body body) {
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::vector<std::uint64_t>> partials(workers, std::vector<std::uint64_t>(width, 0));
  std::atomic<std::uint64_t> next{0};
  auto run = [&](unsigned w) {
    for (std::uint64_t c = next++; c < chunks; c = next++) body(c, partials[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> total(width, 0);
  for (const auto& p : partials)
    for (std::size_t i = 0; i < width; ++i) total[i] += p[i];
  return total;
}

}  // namespace pertinent

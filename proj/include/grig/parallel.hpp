#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace grig {

/// Worker cap for sweeps: min(jobs, GRIG_THREADS if set, hardware threads).
inline std::size_t worker_count(std::size_t jobs) {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("GRIG_THREADS")) {
    long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) hw = std::min<std::size_t>(hw, static_cast<std::size_t>(parsed));
  }
  return std::min(jobs == 0 ? std::size_t{1} : jobs, hw);
}

/// Runs f(i) for i in [0, jobs) on up to worker_count(jobs) threads.
/// Results must be written to per-index slots so the output order is
/// independent of scheduling.
template <class F>
void parallel_for_index(std::size_t jobs, F&& f) {
  std::size_t workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) f(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < jobs; i += workers) f(i);
    });
  for (auto& th : threads) th.join();
}

}  // namespace grig

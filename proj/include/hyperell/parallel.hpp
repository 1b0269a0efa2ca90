#pragma once

// Order-preserving parallel map. Results land in input order whatever the
// worker count, so anything built from them is byte-identical across runs.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hyperell {

/// Worker count from HYPERELL_JOBS, else 1.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("HYPERELL_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// out[i] = f(in[i]). With jobs <= 1 everything runs on the calling thread.
/// The first exception thrown by any call is rethrown.
template <class In, class F>
auto parallel_map(const std::vector<In>& in, F f, unsigned jobs = default_jobs())
    -> std::vector<decltype(f(in.front()))> {
  using Out = decltype(f(in.front()));
  std::vector<Out> out(in.size());
  if (jobs <= 1 || in.size() < 2) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < in.size();) {
      try {
        out[i] = f(in[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(in.size()));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace hyperell

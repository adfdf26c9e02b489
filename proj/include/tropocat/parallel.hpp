#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace tropocat {

/// Worker count: TROPOCAT_THREADS if set and positive, else hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// executed exactly once; callers write into index-addressed slots so results
/// never depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Wall-clock budget. check() throws ResourceBudgetExceeded once expired.
class Budget {
 public:
  Budget() = default;
  explicit Budget(double seconds);

  static Budget unlimited() { return Budget(); }

  bool expired() const;
  void check(const char* where) const;

 private:
  bool limited_ = false;
  std::chrono::steady_clock::time_point deadline_{};
};

/// Small deterministic generator. Draws are defined bit-for-bit (splitmix64),
/// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Independent stream for trial `index`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tropocat

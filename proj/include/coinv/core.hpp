#pragma once

// Shared plumbing: exact number types, error classes, descent-set bitsets and
// a deterministic parallel_for.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace coinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's documented precondition.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a desk-scale size guard is exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw precondition_error(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw internal_error(what);
}

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  try {
    q.set_str(text, 10);
  } catch (const std::invalid_argument&) {
    throw precondition_error("not a rational number: '" + text + "'");
  }
  require(q.get_den() != 0, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

/// A set of positive indices below 64, stored as a bit mask (bit i <-> index i).
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(std::initializer_list<int> items) {
    for (int i : items) insert(i);
  }
  static DescentSet from_mask(std::uint64_t mask) {
    DescentSet s;
    s.mask_ = mask;
    return s;
  }
  template <class Range>
  static DescentSet from_range(const Range& items) {
    DescentSet s;
    for (int i : items) s.insert(i);
    return s;
  }

  void insert(int i) {
    require(i >= 0 && i < 64, "descent index out of range");
    mask_ |= std::uint64_t{1} << i;
  }
  bool contains(int i) const { return i >= 0 && i < 64 && ((mask_ >> i) & 1U); }
  bool subset_of(DescentSet other) const { return (mask_ & ~other.mask_) == 0; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  /// Elements i with lo <= i <= hi.
  DescentSet restricted(int lo, int hi) const {
    DescentSet s;
    for (int i = std::max(lo, 0); i <= std::min(hi, 63); ++i)
      if (contains(i)) s.insert(i);
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  int sum() const {
    int s = 0;
    for (int i : to_vector()) s += i;
    return s;
  }

  friend bool operator==(DescentSet a, DescentSet b) { return a.mask_ == b.mask_; }
  friend bool operator<(DescentSet a, DescentSet b) { return a.mask_ < b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

/// Worker count, capped by COINV_MAX_THREADS when set.
inline std::size_t max_threads() {
  std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("COINV_MAX_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<std::size_t>(hw, static_cast<std::size_t>(cap));
  }
  return hw;
}

/// Runs body(i) for i in [0, count). Results must be written to slot i by the
/// caller so the outcome does not depend on the schedule.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::size_t workers = std::min(max_threads(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace coinv

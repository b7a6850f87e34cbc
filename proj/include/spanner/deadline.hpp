#pragma once

#include <chrono>
#include <limits>

#include "spanner/errors.hpp"

namespace spanner {

// Cooperative deadline. Algorithms poll expired()/check() at loop heads; a
// default-constructed deadline never fires.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline never() { return Deadline{}; }

  static Deadline after_seconds(double s) {
    Deadline d;
    d.armed_ = true;
    d.when_ = clock::now() + std::chrono::duration_cast<clock::duration>(
                                 std::chrono::duration<double>(s));
    return d;
  }

  bool armed() const { return armed_; }

  bool expired() const { return armed_ && clock::now() >= when_; }

  // +inf when unarmed; may go negative once expired.
  double remaining_seconds() const {
    if (!armed_) return std::numeric_limits<double>::infinity();
    return std::chrono::duration<double>(when_ - clock::now()).count();
  }

  void check() const {
    if (expired()) throw DeadlineExceeded{};
  }

 private:
  bool armed_ = false;
  clock::time_point when_{};
};

}  // namespace spanner

#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "mcfl/rational.hpp"

namespace mcfl {

// A nonnegative quantity extended with a distinguished infinity.
// INFINITY absorbs addition and compares greater than every finite value;
// INFINITY == INFINITY holds.
template <typename T>
class Extended {
 public:
  Extended() : value_(0) {}
  explicit Extended(T value) : value_(std::move(value)) {}

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const T& value() const {
    if (infinite_) throw std::logic_error("value() of an infinite quantity");
    return value_;
  }

  Extended& operator+=(const Extended& other) {
    if (infinite_) return *this;
    if (other.infinite_) {
      *this = infinity();
      return *this;
    }
    if constexpr (std::is_integral_v<T>) {
      if (__builtin_add_overflow(value_, other.value_, &value_)) {
        throw std::overflow_error("cost arithmetic overflow");
      }
    } else {
      value_ += other.value_;
    }
    return *this;
  }

  friend Extended operator+(Extended a, const Extended& b) {
    a += b;
    return a;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

  std::string str() const {
    if (infinite_) return "inf";
    if constexpr (std::is_integral_v<T>) {
      return std::to_string(value_);
    } else {
      return to_string(value_);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.str(); }

 private:
  T value_;
  bool infinite_ = false;
};

// Per-unit transport cost, opening cost, or an integral objective value.
using Cost = Extended<int64_t>;

// Objective value of a solution with fractional assignment.
using RationalCost = Extended<Rational>;

// `units` copies of a per-unit cost. Zero units cost nothing even across an
// infinite edge, so only positively used edges propagate infinity.
inline Cost scaled(const Cost& unit_cost, int64_t units) {
  if (units == 0) return Cost(0);
  if (unit_cost.is_infinite()) return Cost::infinity();
  int64_t out = 0;
  if (__builtin_mul_overflow(unit_cost.value(), units, &out)) {
    throw std::overflow_error("cost arithmetic overflow");
  }
  return Cost(out);
}

inline RationalCost to_rational(const Cost& c) {
  return c.is_infinite() ? RationalCost::infinity() : RationalCost(Rational(c.value()));
}

}  // namespace mcfl

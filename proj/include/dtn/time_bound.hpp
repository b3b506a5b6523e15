#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace dtn {

/// A time value that is either finite or infinite. A finite bound carries a
/// strictness flag: `strict` means the value itself is not attained and only
/// times arbitrarily close above it are (an infimum rather than a minimum).
///
/// Ordering: finite < infinite; for equal values the non-strict bound comes
/// first, so `finite(3) < finite(3, strict) < finite(4)`.
class TimeBound {
 public:
  constexpr TimeBound() = default;

  static constexpr TimeBound finite(std::int64_t value, bool strict = false) {
    TimeBound b;
    b.infinite_ = false;
    b.value_ = value;
    b.strict_ = strict;
    return b;
  }
  static constexpr TimeBound infinity() { return TimeBound{}; }
  static constexpr TimeBound zero() { return finite(0); }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  constexpr std::int64_t value() const { return value_; }
  constexpr bool strict() const { return strict_; }

  friend constexpr bool operator==(const TimeBound&, const TimeBound&) = default;
  friend constexpr std::strong_ordering operator<=>(const TimeBound& a, const TimeBound& b) {
    if (a.infinite_ || b.infinite_) return (a.infinite_ ? 1 : 0) <=> (b.infinite_ ? 1 : 0);
    if (auto c = a.value_ <=> b.value_; c != 0) return c;
    return (a.strict_ ? 1 : 0) <=> (b.strict_ ? 1 : 0);
  }

  /// Sum of two bounds; strictness is OR-ed, infinity absorbs.
  friend constexpr TimeBound operator+(const TimeBound& a, const TimeBound& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.value_ + b.value_, a.strict_ || b.strict_);
  }

  /// Scales the value by a non-negative factor; strictness is kept.
  constexpr TimeBound scaled(std::int64_t factor) const {
    if (infinite_) return infinity();
    return finite(value_ * factor, strict_ && factor != 0);
  }

  std::string to_string() const;

 private:
  bool infinite_ = true;
  std::int64_t value_ = 0;
  bool strict_ = false;
};

/// Upper constraint on t used to cut zones at a horizon. A strict horizon is an
/// infimum that zones only approach from above, so the cut is moved past it.
constexpr TimeBound horizon_cut(TimeBound horizon) {
  return horizon.is_finite() && horizon.strict() ? TimeBound::finite(horizon.value() + 1, true)
                                                 : horizon;
}

}  // namespace dtn

#pragma once

// Difference bound matrices over the reference clock 0 plus the model clocks.
// Model clock c lives at matrix index c + 1.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtn/model.hpp"
#include "dtn/time_bound.hpp"

namespace dtn {

/// One matrix entry `(<, v)`, `(<=, v)` or `(<, inf)`. Encoded as
/// `2v + (non-strict ? 1 : 0)` so that integer order equals bound order.
class Bound {
 public:
  constexpr Bound() = default;
  static constexpr Bound le(std::int64_t v) { return Bound(v * 2 + 1); }
  static constexpr Bound lt(std::int64_t v) { return Bound(v * 2); }
  static constexpr Bound infinity() { return Bound(kInfRaw); }
  static constexpr Bound le_zero() { return le(0); }

  constexpr bool is_infinite() const { return raw_ == kInfRaw; }
  constexpr bool strict() const { return (raw_ & 1) == 0; }
  constexpr std::int64_t value() const { return raw_ >> 1; }
  constexpr std::int64_t raw() const { return raw_; }

  friend constexpr auto operator<=>(Bound, Bound) = default;

  friend constexpr Bound operator+(Bound a, Bound b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Bound(((a.value() + b.value()) << 1) | (a.raw_ & b.raw_ & 1));
  }

  std::string to_string() const;

 private:
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();
  constexpr explicit Bound(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = kInfRaw;
};

/// Dense DBM. Entry (i, j) bounds `x_i - x_j`. The matrix does not track
/// canonicity itself; every operation below returns a canonical matrix when
/// given one, except `set`, which callers follow with `canonicalize`.
class Dbm {
 public:
  /// All clocks non-negative and otherwise unconstrained.
  static Dbm universe(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t clock_count() const { return dim_ - 1; }

  Bound at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, Bound b) { cells_[i * dim_ + j] = b; }

  friend bool operator==(const Dbm&, const Dbm&) = default;

  /// Tightens entry (i, j) to b and restores closure in O(dim^2).
  /// Returns false if the zone became empty (matrix contents are then unspecified).
  bool tighten(std::size_t i, std::size_t j, Bound b);

  std::size_t hash() const;

 private:
  explicit Dbm(std::size_t dim) : dim_(dim), cells_(dim * dim, Bound::infinity()) {}
  std::size_t dim_ = 1;
  std::vector<Bound> cells_;
};

/// The zone where every clock equals 0.
Dbm zone_zero(std::size_t dim);

/// All-pairs shortest-path closure; nullopt iff the zone is empty.
std::optional<Dbm> canonicalize(Dbm z);

/// Delay closure: drops every clock upper bound.
Dbm up(const Dbm& z);

/// Intersection with a clock constraint over the model clocks.
std::optional<Dbm> constrain(const Dbm& z, const ClockConstraint& phi);

/// Sets every clock in `clocks` to 0. When `global_clock` is set, resetting
/// model clock 0 throws ReservedClockReset.
Dbm reset(const Dbm& z, std::span<const ClockId> clocks, bool global_clock = false);

/// True iff every valuation of `inner` lies in `outer` (both canonical).
bool includes(const Dbm& outer, const Dbm& inner);

/// Least value of clock c over the zone, strict when it is an infimum.
TimeBound lower_bound(const Dbm& z, ClockId c);

/// Greatest value of clock c over the zone (strict when a supremum).
TimeBound upper_bound_of(const Dbm& z, ClockId c);

/// z restricted to t >= b (t > b when b is strict); t is model clock 0.
std::optional<Dbm> constrain_time_lower(const Dbm& z, TimeBound b);

/// z restricted to t <= b (t < b when b is strict); identity for infinite b.
std::optional<Dbm> constrain_time_upper(const Dbm& z, TimeBound b);

/// z with every upper bound on t dropped: {(v, t') : (v, t) in z, t' >= t}.
/// Canonical when z is; preserves the t lower bound and the other clocks.
Dbm relax_time_upper(const Dbm& z);

/// Classical maximal-constant extrapolation, re-canonicalized.
Dbm extrapolate(const Dbm& z, std::span<const std::int64_t> max_constant);

/// Brute-force membership test, used by tests.
bool contains_point(const Dbm& z, std::span<const double> clocks);

/// Row-major conjunction such as `x <= 4 && t - x <= 2`; infinite entries and
/// the implicit non-negativity constraints are skipped.
std::string render(const Dbm& z, std::span<const std::string> clock_names);

}  // namespace dtn

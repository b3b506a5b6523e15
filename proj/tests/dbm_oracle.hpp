#pragma once

// Brute-force zone membership on a rational grid, the reference for DBM tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "dtn/dbm.hpp"

namespace dtn::test {

// Raw (not necessarily canonical) matrix with random entries.
inline Dbm random_matrix(std::mt19937_64& rng, std::size_t clocks, std::int64_t max_constant) {
  Dbm z = Dbm::universe(clocks + 1);
  for (std::size_t i = 0; i <= clocks; ++i)
    for (std::size_t j = 0; j <= clocks; ++j) {
      if (i == j) continue;
      const auto roll = rng() % 4;
      if (roll == 0) continue;  // keep the universe entry
      const std::int64_t v = static_cast<std::int64_t>(rng() % (2 * max_constant + 1)) - max_constant;
      const Bound b = roll == 1 ? Bound::lt(v) : Bound::le(v);
      // Row 0 keeps every clock non-negative; the grid only covers that orthant.
      z.set(i, j, i == 0 ? std::min(b, Bound::le_zero()) : b);
    }
  return z;
}

inline bool satisfies(Bound b, std::int64_t diff, std::int64_t scale) {
  if (b.is_infinite()) return true;
  return b.strict() ? diff < b.value() * scale : diff <= b.value() * scale;
}

// Brute-force emptiness over a grid of step 1/k with k >= clocks+1: a nonempty
// zone with integer constants always contains such a point, and the least
// point has coordinates at most clocks*C + 1. k is a power of two so that
// grid points are exact doubles.
struct Grid {
  std::size_t clocks;
  std::int64_t scale;
  std::int64_t top;

  Grid(std::size_t n, std::int64_t max_constant)
      : clocks(n), scale(static_cast<std::int64_t>(std::bit_ceil(n + 1))),
        top((static_cast<std::int64_t>(n) * max_constant + 1) * scale) {}

  template <class F>
  bool any(F&& f) const {
    std::vector<std::int64_t> p(clocks + 1, 0);
    return rec(p, 1, f);
  }

  template <class F>
  bool rec(std::vector<std::int64_t>& p, std::size_t i, F& f) const {
    if (i > clocks) return f(p);
    for (std::int64_t v = 0; v <= top; ++v) {
      p[i] = v;
      if (rec(p, i + 1, f)) return true;
    }
    return false;
  }

  bool member(const Dbm& z, const std::vector<std::int64_t>& p) const {
    for (std::size_t i = 0; i <= clocks; ++i)
      for (std::size_t j = 0; j <= clocks; ++j)
        if (i != j && !satisfies(z.at(i, j), p[i] - p[j], scale)) return false;
    return true;
  }

  std::vector<double> real(const std::vector<std::int64_t>& p) const {
    std::vector<double> out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(static_cast<double>(p[i]) / static_cast<double>(scale));
    return out;
  }
};

}  // namespace dtn::test

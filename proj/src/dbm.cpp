#include "dtn/dbm.hpp"

#include <algorithm>

#include "dtn/error.hpp"

namespace dtn {

std::string Bound::to_string() const {
  if (is_infinite()) return "<inf";
  return (strict() ? "<" : "<=") + std::to_string(value());
}

Dbm Dbm::universe(std::size_t dim) {
  Dbm z(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    z.set(i, i, Bound::le_zero());
    z.set(0, i, Bound::le_zero());
  }
  return z;
}

bool Dbm::tighten(std::size_t i, std::size_t j, Bound b) {
  if (b >= at(i, j)) return true;
  if (b + at(j, i) < Bound::le_zero()) return false;
  set(i, j, b);
  for (std::size_t k = 0; k < dim_; ++k) {
    const Bound ki = at(k, i);
    if (ki.is_infinite()) continue;
    const Bound kij = ki + b;
    for (std::size_t l = 0; l < dim_; ++l) {
      const Bound cand = kij + at(j, l);
      if (cand < at(k, l)) set(k, l, cand);
    }
  }
  return true;
}

std::size_t Dbm::hash() const {
  std::size_t h = dim_;
  for (auto b : cells_) h ^= std::hash<std::int64_t>{}(b.raw()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Dbm zone_zero(std::size_t dim) {
  Dbm z = Dbm::universe(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) z.set(i, j, Bound::le_zero());
  return z;
}

std::optional<Dbm> canonicalize(Dbm z) {
  const std::size_t n = z.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Bound ik = z.at(i, k);
      if (ik.is_infinite()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Bound cand = ik + z.at(k, j);
        if (cand < z.at(i, j)) z.set(i, j, cand);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (z.at(i, i) < Bound::le_zero()) return std::nullopt;
  return z;
}

Dbm up(const Dbm& z) {
  Dbm out = z;
  for (std::size_t i = 1; i < out.dim(); ++i) out.set(i, 0, Bound::infinity());
  return out;
}

Dbm relax_time_upper(const Dbm& z) {
  Dbm out = z;
  for (std::size_t j = 0; j < out.dim(); ++j)
    if (j != 1) out.set(1, j, Bound::infinity());
  return out;
}

namespace {

bool apply_atom(Dbm& z, const AtomicConstraint& atom) {
  const std::size_t x = atom.clock.index + 1;
  const std::size_t y = atom.other ? atom.other->index + 1 : 0;
  const std::int64_t d = atom.constant;
  switch (atom.relation) {
    case Relation::Less: return z.tighten(x, y, Bound::lt(d));
    case Relation::LessEq: return z.tighten(x, y, Bound::le(d));
    case Relation::Equal: return z.tighten(x, y, Bound::le(d)) && z.tighten(y, x, Bound::le(-d));
    case Relation::GreaterEq: return z.tighten(y, x, Bound::le(-d));
    case Relation::Greater: return z.tighten(y, x, Bound::lt(-d));
  }
  return false;
}

}  // namespace

std::optional<Dbm> constrain(const Dbm& z, const ClockConstraint& phi) {
  Dbm out = z;
  for (const auto& atom : phi.atoms) {
    if (atom.clock.index + 1 >= z.dim() || (atom.other && atom.other->index + 1 >= z.dim()))
      throw Error(ErrorCode::InvalidArgument, "constraint refers to a clock outside the zone");
    if (!apply_atom(out, atom)) return std::nullopt;
  }
  return out;
}

Dbm reset(const Dbm& z, std::span<const ClockId> clocks, bool global_clock) {
  Dbm out = z;
  for (auto c : clocks) {
    if (global_clock && c.index == 0)
      throw Error(ErrorCode::ReservedClockReset, "the global clock 't' cannot be reset");
    const std::size_t x = c.index + 1;
    for (std::size_t j = 0; j < out.dim(); ++j) {
      out.set(x, j, out.at(0, j));
      out.set(j, x, out.at(j, 0));
    }
    out.set(x, x, Bound::le_zero());
  }
  return out;
}

bool includes(const Dbm& outer, const Dbm& inner) {
  if (outer.dim() != inner.dim()) return false;
  for (std::size_t i = 0; i < outer.dim(); ++i)
    for (std::size_t j = 0; j < outer.dim(); ++j)
      if (inner.at(i, j) > outer.at(i, j)) return false;
  return true;
}

TimeBound lower_bound(const Dbm& z, ClockId c) {
  const Bound b = z.at(0, c.index + 1);  // 0 - c <= -v
  return TimeBound::finite(-b.value(), b.strict());
}

TimeBound upper_bound_of(const Dbm& z, ClockId c) {
  const Bound b = z.at(c.index + 1, 0);
  if (b.is_infinite()) return TimeBound::infinity();
  return TimeBound::finite(b.value(), b.strict());
}

std::optional<Dbm> constrain_time_lower(const Dbm& z, TimeBound b) {
  if (b.is_infinite()) return std::nullopt;
  Dbm out = z;
  const Bound entry = b.strict() ? Bound::lt(-b.value()) : Bound::le(-b.value());
  if (!out.tighten(0, 1, entry)) return std::nullopt;
  return out;
}

std::optional<Dbm> constrain_time_upper(const Dbm& z, TimeBound b) {
  if (b.is_infinite()) return z;
  Dbm out = z;
  const Bound entry = b.strict() ? Bound::lt(b.value()) : Bound::le(b.value());
  if (!out.tighten(1, 0, entry)) return std::nullopt;
  return out;
}

Dbm extrapolate(const Dbm& z, std::span<const std::int64_t> max_constant) {
  Dbm out = z;
  const std::size_t n = z.dim();
  auto bound_of = [&](std::size_t i) -> std::int64_t { return i == 0 ? 0 : max_constant[i - 1]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bound b = out.at(i, j);
      if (b.is_infinite()) continue;
      if (b > Bound::le(bound_of(i)))
        out.set(i, j, Bound::infinity());
      else if (b < Bound::lt(-bound_of(j)))
        out.set(i, j, Bound::lt(-bound_of(j)));
    }
  // Extrapolation only relaxes a non-empty zone, so closure cannot fail.
  return *canonicalize(std::move(out));
}

bool contains_point(const Dbm& z, std::span<const double> clocks) {
  auto value = [&](std::size_t i) { return i == 0 ? 0.0 : clocks[i - 1]; };
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j) {
      const Bound b = z.at(i, j);
      if (b.is_infinite()) continue;
      const double diff = value(i) - value(j);
      const double v = static_cast<double>(b.value());
      if (b.strict() ? !(diff < v) : !(diff <= v)) return false;
    }
  return true;
}

std::string render(const Dbm& z, std::span<const std::string> clock_names) {
  auto name = [&](std::size_t i) {
    return i - 1 < clock_names.size() ? clock_names[i - 1] : "c" + std::to_string(i);
  };
  std::string out;
  auto emit = [&](const std::string& atom) {
    if (!out.empty()) out += " && ";
    out += atom;
  };
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j) {
      if (i == j) continue;
      const Bound b = z.at(i, j);
      if (b.is_infinite()) continue;
      const char* op = b.strict() ? "<" : "<=";
      if (i == 0) {
        if (b == Bound::le_zero()) continue;
        emit(name(j) + (b.strict() ? " > " : " >= ") + std::to_string(-b.value()));
      } else if (j == 0) {
        emit(name(i) + " " + op + " " + std::to_string(b.value()));
      } else {
        emit(name(i) + " - " + name(j) + " " + op + " " + std::to_string(b.value()));
      }
    }
  return out.empty() ? "true" : out;
}

}  // namespace dtn

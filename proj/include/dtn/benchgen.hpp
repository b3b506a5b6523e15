#pragma once

// Deterministic model generators: the gossip clock synchronization family
// GCS(k), the Star(k) family, and small random models for property tests.

#include <cstdint>

#include "dtn/model.hpp"

namespace dtn {

/// Locations h0..h{k-1}, l0..l{k-1}, h_sy, l_sy; initial h0. With
/// `with_invariants`, Inv(h_i) = x <= 2. Throws InvalidArgument for k < 2.
Gta gen_gcs(std::size_t k, bool with_invariants);

/// q_final is reachable only after every guard location g1..gk has been
/// reached. Throws InvalidArgument for k < 1.
Gta gen_star(std::size_t k);

struct RandomLimits {
  std::size_t max_locations = 5;
  std::size_t max_transitions = 8;
  std::int64_t max_constant = 4;
  std::size_t max_guards = 2;
  /// Guard locations get no invariant, so every guard location is persistent.
  bool persistent_guards = true;
};

/// Seeded single-clock model within the limits; always passes validate.
Gta gen_random(std::uint64_t seed, const RandomLimits& limits = {});

}  // namespace dtn

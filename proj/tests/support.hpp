#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dtn/benchgen.hpp"
#include "dtn/model_io.hpp"

namespace dtn::test {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DTN_TEST_DATA) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline Gta load_model(const std::string& name) { return parse_gta(read_data(name)); }

inline LocationId loc(const Gta& m, std::string_view name) {
  auto q = m.find_location(name);
  if (!q) throw Error(ErrorCode::UnknownLocation, std::string(name));
  return *q;
}

/// GCS without invariants for k = 2, 3, Star(1..3), then `randoms` seeded
/// random models whose guard locations are persistent.
inline std::vector<Gta> persistent_corpus(std::size_t randoms) {
  std::vector<Gta> corpus;
  for (std::size_t k = 2; k <= 3; ++k) corpus.push_back(gen_gcs(k, false));
  for (std::size_t k = 1; k <= 3; ++k) corpus.push_back(gen_star(k));
  for (std::uint64_t seed = 1; seed <= randoms; ++seed) corpus.push_back(gen_random(seed));
  return corpus;
}

// Larger persistent random models; at most three guards keeps the product
// oracle within four processes.
inline std::vector<Gta> wide_corpus(std::size_t count) {
  RandomLimits limits;
  limits.max_locations = 7;
  limits.max_transitions = 12;
  limits.max_guards = 3;
  std::vector<Gta> corpus;
  for (std::uint64_t seed = 1; seed <= count; ++seed) corpus.push_back(gen_random(5000 + seed, limits));
  return corpus;
}

}  // namespace dtn::test

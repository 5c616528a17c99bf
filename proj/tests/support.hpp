#pragma once

// Shared helpers for the test binaries: fixture paths, small constructors,
// a deterministic RNG, and the golden-table matcher.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qf/character_table.hpp"
#include "qf/cyclotomic.hpp"
#include "qf/documents.hpp"
#include "qf/perm_group.hpp"
#include "qf/rep_ring.hpp"

namespace qt {

inline std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

inline std::string data_path(const std::string& name) {
  return env_or("QF_DATA", "tests/data") + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return env_or("QF_GOLDEN", "tests/golden") + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline qf::Json load_json(const std::string& path) {
  return qf::parse_json_text(read_file(path));
}

inline qf::TablePtr table_of(const qf::PermGroup& group) {
  return std::make_shared<const qf::CharacterTable>(qf::compute_table(group));
}

inline qf::TablePtr cyclic_table(int n) { return table_of(qf::PermGroup::cyclic(n)); }

inline qf::Representation make_rep(const qf::TablePtr& table, std::vector<qf::Int> mults) {
  qf::Representation rep{table, std::move(mults)};
  rep.validate();
  return rep;
}

inline qf::VirtualCharacter make_virtual(const qf::TablePtr& table, std::vector<qf::Int> coords) {
  return qf::VirtualCharacter{table, std::move(coords)};
}

inline qf::Cyclotomic cyc(const std::string& text) { return qf::Cyclotomic::parse(text); }

// Deterministic 64-bit generator (splitmix64); fixed seeds keep property
// tests reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline qf::Cyclotomic random_cyclotomic(Rng& rng, std::int64_t order) {
  const std::int64_t phi = qf::euler_phi(order);
  std::vector<qf::Rat> coords;
  coords.reserve(phi);
  for (std::int64_t i = 0; i < phi; ++i)
    coords.emplace_back(qf::Int(rng.range(-4, 4)), qf::Int(rng.range(1, 3)));
  return qf::Cyclotomic::from_coords(order, std::move(coords));
}

// Compares a computed table against a hand-written golden document
// { group_order, class_sizes, element_orders, irreducibles } up to
// simultaneous row and column permutation. Column candidates are restricted
// to equal (class size, element order) signatures; rows of a valid table are
// pairwise distinct, so the row matching per column assignment is unique.
bool golden_match(const qf::CharacterTable& computed, const qf::Json& golden, std::string* why);

}  // namespace qt

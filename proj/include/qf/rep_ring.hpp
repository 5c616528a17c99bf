#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qf/character_table.hpp"
#include "qf/cyclotomic.hpp"
#include "qf/numeric.hpp"

namespace qf {

// A class function: one cyclotomic value per conjugacy class.
struct ClassFunction {
  TablePtr table;
  std::vector<Cyclotomic> values;
};

// Integer combination of the table's irreducible characters.
struct VirtualCharacter {
  TablePtr table;
  std::vector<Int> coords;

  bool operator==(const VirtualCharacter& rhs) const { return coords == rhs.coords; }
};

// Genuine representation, stored as multiplicities over the irreducibles.
struct Representation {
  TablePtr table;
  std::vector<Int> mults;

  void validate() const;  // mults >= 0, dimension >= 1, length k
  Int dimension() const;
  VirtualCharacter as_virtual() const;
};

bool same_table(const TablePtr& a, const TablePtr& b);

ClassFunction to_class_function(const VirtualCharacter& v);

// Exact decomposition over the irreducible basis. On failure `character` is
// empty and the first non-integral inner product is reported.
struct Decomposition {
  std::optional<VirtualCharacter> character;
  int first_bad_index = -1;
  Cyclotomic first_bad_value;
};
Decomposition from_class_function(const ClassFunction& f);

// Pointwise product, decomposed back to coordinates. Products of virtual
// characters are always virtual; a failed decomposition is an internal error.
VirtualCharacter mul(const VirtualCharacter& a, const VirtualCharacter& b);

VirtualCharacter trivial_character(const TablePtr& table);

// 1 - [rep] as a virtual character.
VirtualCharacter one_minus(const Representation& rep);

bool is_faithful(const Representation& rep);

// Unit test in the representation ring: all class values nonzero and the
// pointwise inverse decomposes integrally.
struct UnitCheck {
  enum class Failure { None, ZeroValue, NonIntegralInverse };
  std::optional<VirtualCharacter> inverse;
  Failure failure = Failure::None;
  int zero_class = -1;  // set for ZeroValue

  bool ok() const { return failure == Failure::None; }
};
UnitCheck is_unit(const VirtualCharacter& v);

// First tensor power of the representation character containing each
// irreducible; empty entries mean not covered within the bound.
struct FockCoverage {
  int kmax_used = 0;
  std::vector<std::optional<int>> first_power;

  bool complete() const;
};
// kmax defaults to (#distinct character values) - 1, the Burnside-Brauer
// bound; the zeroth power is the trivial character.
FockCoverage fock_coverage(const Representation& rep, std::optional<int> kmax = {});

// Cokernel and kernel of multiplication by 1 - [rep] on the irreducible
// basis: k0 = Z^free_rank + sum Z/d for the listed torsion factors, and k1
// is free of rank k1_rank.
struct KGroups {
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
  int free_rank = 0;
  int k1_rank = 0;

  bool operator==(const KGroups& rhs) const = default;
};
KGroups equivariant_k_groups(const Representation& rep);

// The classical units: plus and minus each degree-1 character.
std::vector<VirtualCharacter> trivial_units(const TablePtr& table);

// Visits integer vectors of the given length with sup-norm <= height in
// graded lexicographic order: by total absolute value, then lexicographic
// within a grade. Stops early when the visitor returns false or `limit`
// vectors have been seen; returns the number visited.
std::int64_t scan_graded_lex(int length, int height, std::int64_t limit,
                             const std::function<bool(std::span<const std::int64_t>)>& visit);

// Scans coordinate vectors of sup-norm <= height in graded lexicographic
// order, up to `limit` candidates, returning every unit found.
std::vector<VirtualCharacter> enumerate_units(const TablePtr& table, int height,
                                              std::int64_t limit);

}  // namespace qf

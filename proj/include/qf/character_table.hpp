#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qf/cyclotomic.hpp"
#include "qf/perm_group.hpp"

namespace qf {

// Exact character table. Rows are irreducible characters, columns are
// conjugacy classes (column 0 = identity class); every value lives in the
// cyclotomic field of order `exponent`.
struct CharacterTable {
  std::int64_t group_order = 1;
  int num_classes = 1;
  std::int64_t exponent = 1;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::int64_t> element_orders;
  // power_maps[t][j] = class of g^t for g in class j, for every t mod exponent.
  std::vector<std::vector<int>> power_maps;
  std::vector<std::vector<Cyclotomic>> irreducibles;
  std::vector<Int> degrees;
  std::vector<int> linear_indices;

  // Class of inverses, read off power_maps at t = exponent - 1.
  int inverse_class(int j) const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Class-algebra structure constants: a[i][j][k] counts pairs (x,y) in
// C_i x C_j with x*y equal to a fixed representative of C_k.
std::vector<std::vector<std::vector<std::int64_t>>> class_constants(const ConjugacyData& data);

// Smallest prime p with p = 1 mod e and p > 2*sqrt(group_order).
std::int64_t dixon_prime(std::int64_t group_order, std::int64_t exponent);

// Dixon-Schneider table computation. Tries `prime_overrides` first, then a
// bounded list of admissible primes; rethrows the last split failure if all
// attempts fail. The result is fully validated and canonically ordered
// (trivial row first, then ascending by degree and value order).
CharacterTable compute_table(const PermGroup& group,
                             const std::vector<std::int64_t>& prime_overrides = {});

// Checks every table invariant exactly; throws ValidationError naming the
// first violated invariant.
void validate_table(const CharacterTable& table);

}  // namespace qf

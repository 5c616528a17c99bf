#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "qf/permutation.hpp"

namespace qf {

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

// Finite permutation group given by generators on {0, ..., degree-1}.
struct PermGroup {
  int degree = 1;
  std::vector<Permutation> generators;

  void validate() const;  // throws Error on empty/mismatched generators

  static PermGroup trivial();
  static PermGroup cyclic(int n);
  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  static PermGroup dihedral(int n);  // order 2n, n >= 3
  static PermGroup klein_four();
  static PermGroup quaternion();  // Q8 acting on itself by left multiplication
};

// Breadth-first closure of the generators, identity first. The order is
// deterministic: children are explored as element.then(generator) with
// generators in their given order. Throws GroupTooLargeError past `limit`.
std::vector<Permutation> enumerate_elements(const PermGroup& group,
                                            std::size_t limit = kDefaultEnumerationLimit);

struct ConjugacyData {
  std::vector<Permutation> elements;
  std::vector<int> class_of;                  // element index -> class index
  std::vector<int> class_reps;                // class -> minimal element index
  std::vector<std::int64_t> class_sizes;      // per class
  std::vector<std::int64_t> element_orders;   // per class
  std::int64_t exponent = 1;                  // lcm of element orders
  std::unordered_map<Permutation, int, PermutationHash> index_of;

  int num_classes() const { return static_cast<int>(class_reps.size()); }
  int index_of_element(const Permutation& p) const;  // throws InternalError if absent
};

// Classes ordered by minimal element index, so the identity class comes first.
// `conjugators` defaults to the full element list; passing the group's
// generators gives the same classes faster.
ConjugacyData conjugacy_data(std::vector<Permutation> elements,
                             std::span<const Permutation> conjugators = {});

// Class map of g -> g^k; k is taken mod the group exponent (negatives allowed).
std::vector<int> power_map(const ConjugacyData& data, std::int64_t k);

}  // namespace qf

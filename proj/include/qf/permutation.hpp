#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qf {

// Permutation of {0, ..., degree-1}, stored as its image list.
class Permutation {
 public:
  // Validates that `images` is a bijection; throws Error otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  // Composition left to right: (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& next) const;

  Permutation inverse() const;

  // Nonnegative powers, with this->then(*this) as the square.
  Permutation power(std::int64_t k) const;

  // Multiplicative order (lcm of cycle lengths).
  std::int64_t order() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace qf

#include "qf/permutation.hpp"

#include <numeric>

#include "qf/errors.hpp"

namespace qf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation: degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int img : images_) {
    if (img < 0 || img >= static_cast<int>(images_.size()))
      throw Error("permutation: image out of range");
    if (seen[img]) throw Error("permutation: image list is not a bijection");
    seen[img] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw Error("permutation: degree mismatch");
  Permutation out = *this;
  for (int i = 0; i < degree(); ++i) out.images_[i] = next.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
  return out;
}

Permutation Permutation::power(std::int64_t k) const {
  if (k < 0) throw Error("permutation: negative power");
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return result;
}

std::int64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::int64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int img : p.images()) {
    h ^= static_cast<std::size_t>(img);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qf

#include "qf/perm_group.hpp"

#include <deque>
#include <numeric>

#include "qf/errors.hpp"

namespace qf {

void PermGroup::validate() const {
  if (degree < 1) throw Error("group: degree must be positive");
  if (generators.empty()) throw Error("group: generator list must be nonempty");
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("group: generator degree mismatch");
}

PermGroup PermGroup::trivial() { return PermGroup{1, {Permutation::identity(1)}}; }

PermGroup PermGroup::cyclic(int n) {
  if (n < 1) throw Error("cyclic: n must be positive");
  if (n == 1) return trivial();
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return PermGroup{n, {Permutation(std::move(cycle))}};
}

PermGroup PermGroup::symmetric(int n) {
  if (n < 2) return trivial();
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  return PermGroup{n, {Permutation(std::move(swap01)), cyclic(n).generators[0]}};
}

PermGroup PermGroup::alternating(int n) {
  if (n < 3) return trivial();
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    images[0] = 1;
    images[1] = i;
    images[i] = 0;
    gens.emplace_back(std::move(images));
  }
  return PermGroup{n, std::move(gens)};
}

PermGroup PermGroup::dihedral(int n) {
  if (n < 3) throw Error("dihedral: n must be at least 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = n - 1 - i;
  }
  return PermGroup{n, {Permutation(std::move(rot)), Permutation(std::move(refl))}};
}

PermGroup PermGroup::klein_four() {
  return PermGroup{4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})}};
}

PermGroup PermGroup::quaternion() {
  // Points 0..7 label 1, -1, i, -i, j, -j, k, -k; generators are left
  // multiplication by i and by j.
  return PermGroup{8, {Permutation({2, 3, 1, 0, 6, 7, 5, 4}),
                       Permutation({4, 5, 7, 6, 1, 0, 2, 3})}};
}

std::vector<Permutation> enumerate_elements(const PermGroup& group, std::size_t limit) {
  group.validate();
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, int, PermutationHash> seen;
  std::deque<int> queue;

  auto add = [&](Permutation p) {
    if (seen.contains(p)) return;
    if (elements.size() >= limit)
      throw GroupTooLargeError("group closure exceeds limit of " + std::to_string(limit));
    int index = static_cast<int>(elements.size());
    seen.emplace(p, index);
    elements.push_back(std::move(p));
    queue.push_back(index);
  };

  add(Permutation::identity(group.degree));
  while (!queue.empty()) {
    int current = queue.front();
    queue.pop_front();
    for (const auto& gen : group.generators) add(elements[current].then(gen));
  }
  return elements;
}

int ConjugacyData::index_of_element(const Permutation& p) const {
  auto it = index_of.find(p);
  if (it == index_of.end()) throw InternalError("element not in enumerated group");
  return it->second;
}

ConjugacyData conjugacy_data(std::vector<Permutation> elements,
                             std::span<const Permutation> conjugators) {
  if (elements.empty()) throw Error("conjugacy_data: empty element list");
  if (!elements[0].is_identity())
    throw Error("conjugacy_data: element 0 must be the identity");

  ConjugacyData data;
  data.elements = std::move(elements);
  const auto n = data.elements.size();
  data.index_of.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data.index_of.emplace(data.elements[i], static_cast<int>(i));
  for (const auto& g : data.elements)
    if (!data.index_of.contains(g.inverse()))
      throw Error("conjugacy_data: element list not closed under inverse");

  std::vector<std::pair<Permutation, Permutation>> conj;  // (g, g^-1)
  if (conjugators.empty()) conjugators = std::span<const Permutation>(data.elements);
  conj.reserve(conjugators.size());
  for (const auto& g : conjugators) conj.emplace_back(g, g.inverse());

  data.class_of.assign(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (data.class_of[start] != -1) continue;
    const int cls = static_cast<int>(data.class_reps.size());
    data.class_reps.push_back(static_cast<int>(start));
    data.class_of[start] = cls;
    std::int64_t size = 1;
    std::deque<int> orbit{static_cast<int>(start)};
    while (!orbit.empty()) {
      int x = orbit.front();
      orbit.pop_front();
      for (const auto& [g, ginv] : conj) {
        int y = data.index_of_element(ginv.then(data.elements[x]).then(g));
        if (data.class_of[y] == -1) {
          data.class_of[y] = cls;
          ++size;
          orbit.push_back(y);
        }
      }
    }
    data.class_sizes.push_back(size);
    data.element_orders.push_back(data.elements[start].order());
    data.exponent = std::lcm(data.exponent, data.element_orders.back());
  }
  return data;
}

std::vector<int> power_map(const ConjugacyData& data, std::int64_t k) {
  const std::int64_t e = data.exponent;
  std::int64_t kk = ((k % e) + e) % e;
  std::vector<int> map(data.num_classes());
  for (int c = 0; c < data.num_classes(); ++c) {
    const auto& rep = data.elements[data.class_reps[c]];
    map[c] = data.class_of[data.index_of_element(rep.power(kk))];
  }
  return map;
}

}  // namespace qf

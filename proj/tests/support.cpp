#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qt {

namespace {

using Signature = std::pair<std::int64_t, std::int64_t>;  // (class size, element order)

std::string describe(const Signature& s) {
  return "(size " + std::to_string(s.first) + ", order " + std::to_string(s.second) + ")";
}

}  // namespace

bool golden_match(const qf::CharacterTable& computed, const qf::Json& golden, std::string* why) {
  const auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };

  const std::int64_t order = golden.at("group_order").get<std::int64_t>();
  if (order != computed.group_order) return fail("group order differs");

  const auto& sizes = golden.at("class_sizes");
  const auto& orders = golden.at("element_orders");
  const auto& rows = golden.at("irreducibles");
  const int k = computed.num_classes;
  if (static_cast<int>(sizes.size()) != k || static_cast<int>(orders.size()) != k ||
      static_cast<int>(rows.size()) != k)
    return fail("class count differs");

  std::vector<std::vector<qf::Cyclotomic>> golden_rows(k);
  for (int r = 0; r < k; ++r) {
    if (static_cast<int>(rows[r].size()) != k) return fail("ragged golden row");
    for (int j = 0; j < k; ++j)
      golden_rows[r].push_back(qf::Cyclotomic::parse(rows[r][j].get<std::string>()));
  }

  // Bucket columns by (class size, element order) on both sides.
  std::map<Signature, std::vector<int>> golden_cols, computed_cols;
  for (int j = 0; j < k; ++j) {
    golden_cols[{sizes[j].get<std::int64_t>(), orders[j].get<std::int64_t>()}].push_back(j);
    computed_cols[{computed.class_sizes[j], computed.element_orders[j]}].push_back(j);
  }
  if (golden_cols.size() != computed_cols.size()) return fail("class signature sets differ");
  for (const auto& [sig, cols] : golden_cols) {
    const auto it = computed_cols.find(sig);
    if (it == computed_cols.end() || it->second.size() != cols.size())
      return fail("class signature multiplicity differs at " + describe(sig));
  }

  // Try every signature-preserving column assignment; for each, rows of a
  // valid table are distinct so the row matching is forced.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> buckets;
  for (const auto& [sig, cols] : golden_cols) buckets.emplace_back(cols, computed_cols[sig]);

  std::vector<int> sigma(k, -1);
  const std::function<bool(std::size_t)> try_bucket = [&](std::size_t b) -> bool {
    if (b == buckets.size()) {
      std::vector<bool> used(k, false);
      for (int r = 0; r < k; ++r) {
        int found = -1;
        for (int s = 0; s < k && found < 0; ++s) {
          if (used[s]) continue;
          bool all = true;
          for (int j = 0; j < k && all; ++j)
            all = golden_rows[r][j] == computed.irreducibles[s][sigma[j]];
          if (all) found = s;
        }
        if (found < 0) return false;
        used[found] = true;
      }
      return true;
    }
    const auto& [gold, comp] = buckets[b];
    std::vector<int> perm = comp;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < gold.size(); ++i) sigma[gold[i]] = perm[i];
      if (try_bucket(b + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  if (try_bucket(0)) return true;
  return fail("no row/column permutation matches the golden values");
}

}  // namespace qt

#include "qf/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qf/errors.hpp"
#include "qf/mod_matrix.hpp"

namespace qf {

int CharacterTable::inverse_class(int j) const {
  return power_maps[static_cast<std::size_t>((exponent - 1) % exponent)][j];
}

std::vector<std::vector<std::vector<std::int64_t>>> class_constants(const ConjugacyData& data) {
  const int k = data.num_classes();
  std::vector tensor(k, std::vector(k, std::vector<std::int64_t>(k, 0)));
  for (std::size_t xi = 0; xi < data.elements.size(); ++xi) {
    const int i = data.class_of[xi];
    const Permutation xinv = data.elements[xi].inverse();
    for (int c = 0; c < k; ++c) {
      const Permutation y = xinv.then(data.elements[data.class_reps[c]]);
      const int j = data.class_of[data.index_of_element(y)];
      ++tensor[i][j][c];
    }
  }
  return tensor;
}

std::int64_t dixon_prime(std::int64_t group_order, std::int64_t exponent) {
  for (std::int64_t p = exponent + 1;; p += exponent) {
    if (p < 3) continue;
    if (p * p > 4 * group_order && is_prime(p)) return p;
  }
}

namespace {

std::int64_t mod_of(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inv_of(std::int64_t v, std::int64_t p) { return mod_inverse(mod_of(v, p), p); }

struct RawRow {
  Int degree;
  std::vector<Cyclotomic> values;
};

// One Dixon-Schneider pass for a fixed admissible prime.
std::vector<RawRow> rows_mod_prime(const ConjugacyData& data,
                                   const std::vector<std::vector<std::vector<std::int64_t>>>& a,
                                   const std::vector<std::vector<int>>& pm, std::int64_t p) {
  const int k = data.num_classes();
  const std::int64_t e = data.exponent;
  const std::int64_t n = static_cast<std::int64_t>(data.elements.size());

  std::vector<ModMatrix> mats;
  mats.reserve(k);
  for (int i = 0; i < k; ++i) {
    ModMatrix m(p, k, k);
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < k; ++c) m.at(j, c) = mod_of(a[i][j][c], p);
    mats.push_back(std::move(m));
  }
  std::vector<std::vector<std::int64_t>> vecs = common_eigenvectors(mats, p, k);

  std::vector<std::int64_t> size_inv(k);
  for (int j = 0; j < k; ++j) size_inv[j] = inv_of(data.class_sizes[j], p);
  const std::vector<int>& inv_class = pm[static_cast<std::size_t>((e - 1) % e)];

  const std::int64_t root = smallest_primitive_root(p);
  const std::int64_t z = mod_pow(root, (p - 1) / e, p);
  const std::int64_t zinv = inv_of(z, p);
  std::vector<std::int64_t> zinv_pow(e);
  zinv_pow[0] = 1;
  for (std::int64_t t = 1; t < e; ++t) zinv_pow[t] = mod_of(zinv_pow[t - 1] * zinv, p);
  const std::int64_t e_inv = inv_of(e, p);

  std::int64_t degree_cap = 1;
  while ((degree_cap + 1) * (degree_cap + 1) <= n) ++degree_cap;

  std::vector<RawRow> rows;
  rows.reserve(k);
  for (std::vector<std::int64_t>& v : vecs) {
    if (v[0] == 0) throw SplitFailureError("eigenvector vanishes on the identity class");
    const std::int64_t scale = inv_of(v[0], p);
    for (std::int64_t& x : v) x = mod_of(x * scale, p);

    std::int64_t s = 0;
    for (int j = 0; j < k; ++j) s = mod_of(s + v[j] * mod_of(v[inv_class[j]] * size_inv[j], p), p);
    if (s == 0) throw SplitFailureError("degree equation degenerates modulo the chosen prime");
    const std::int64_t rhs = mod_of(mod_of(n, p) * inv_of(s, p), p);
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= degree_cap; ++d)
      if (mod_of(d * d, p) == rhs) {
        degree = d;
        break;
      }
    if (degree == 0) throw SplitFailureError("no admissible degree solves the degree equation");

    std::vector<std::int64_t> theta(k);
    for (int j = 0; j < k; ++j) theta[j] = mod_of(degree * mod_of(v[j] * size_inv[j], p), p);

    RawRow row;
    row.degree = degree;
    row.values.reserve(k);
    for (int j = 0; j < k; ++j) {
      Cyclotomic value = Cyclotomic::zero(e);
      std::int64_t total = 0;
      for (std::int64_t l = 0; l < e; ++l) {
        std::int64_t acc = 0;
        for (std::int64_t t = 0; t < e; ++t)
          acc = mod_of(acc + theta[pm[t][j]] * zinv_pow[(t * l) % e], p);
        const std::int64_t mult = mod_of(e_inv * acc, p);
        total += mult;
        if (mult != 0)
          value = value + Cyclotomic::root_of_unity(e, l) * Cyclotomic::from_rational(Rat(mult), 1);
      }
      if (total != degree)
        throw SplitFailureError("lifted eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(std::move(value));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool value_less(const Cyclotomic& a, const Cyclotomic& b) {
  const std::vector<Rat>& x = a.coords();
  const std::vector<Rat>& y = b.coords();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return x.size() < y.size();
}

bool row_less(const RawRow& a, const RawRow& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t j = 0; j < a.values.size(); ++j) {
    if (!(a.values[j] == b.values[j])) return value_less(a.values[j], b.values[j]);
  }
  return false;
}

bool is_trivial_row(const RawRow& row) {
  for (const Cyclotomic& v : row.values)
    if (!v.is_rational() || v.rational_value() != 1) return false;
  return true;
}

}  // namespace

CharacterTable compute_table(const PermGroup& group,
                             const std::vector<std::int64_t>& prime_overrides) {
  group.validate();
  ConjugacyData data = conjugacy_data(enumerate_elements(group));
  const int k = data.num_classes();
  const std::int64_t e = data.exponent;
  const std::int64_t n = static_cast<std::int64_t>(data.elements.size());

  const auto a = class_constants(data);
  std::vector<std::vector<int>> pm;
  pm.reserve(e);
  for (std::int64_t t = 0; t < e; ++t) pm.push_back(power_map(data, t));

  std::vector<std::int64_t> primes;
  for (std::int64_t p : prime_overrides) {
    if (p <= 2 || !is_prime(p) || p % e != 1 % e || p * p <= 4 * n)
      throw Error("prime override must be a prime p = 1 mod exponent with p > 2*sqrt(|G|)");
    primes.push_back(p);
  }
  std::int64_t p = dixon_prime(n, e);
  for (int i = 0; i < 5; ++i) {
    primes.push_back(p);
    do p += (e > 1 ? e : 1);
    while (!(p > 2 && p * p > 4 * n && is_prime(p)));
  }

  std::string last_failure = "no admissible prime attempted";
  for (std::int64_t prime : primes) {
    std::vector<RawRow> rows;
    try {
      rows = rows_mod_prime(data, a, pm, prime);
    } catch (const SplitFailureError& ex) {
      last_failure = ex.what();
      continue;
    }

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    const auto trivial = std::find_if(rows.begin(), rows.end(), is_trivial_row);
    if (trivial == rows.end()) {
      last_failure = "no trivial character among the lifted rows";
      continue;
    }
    const std::size_t trivial_index = static_cast<std::size_t>(trivial - rows.begin());
    std::erase(order, trivial_index);
    std::sort(order.begin(), order.end(),
              [&rows](std::size_t x, std::size_t y) { return row_less(rows[x], rows[y]); });
    order.insert(order.begin(), trivial_index);

    CharacterTable table;
    table.group_order = n;
    table.num_classes = k;
    table.exponent = e;
    table.class_sizes = data.class_sizes;
    table.element_orders = data.element_orders;
    table.power_maps = pm;
    for (std::size_t idx : order) {
      table.degrees.push_back(rows[idx].degree);
      table.irreducibles.push_back(std::move(rows[idx].values));
    }
    for (int r = 0; r < k; ++r)
      if (table.degrees[r] == 1) table.linear_indices.push_back(r);

    try {
      validate_table(table);
    } catch (const ValidationError& ex) {
      last_failure = ex.what();
      continue;
    }
    return table;
  }
  throw SplitFailureError(last_failure);
}

namespace {

bool is_exact_integer(const Cyclotomic& v, const Int& expected) {
  return v.is_rational() && v.rational_value() == Rat(expected);
}

}  // namespace

void validate_table(const CharacterTable& table) {
  const int k = table.num_classes;
  const std::int64_t e = table.exponent;
  auto fail = [](const std::string& what) { throw ValidationError(what); };

  if (k < 1) fail("table must have at least one class");
  if (static_cast<int>(table.class_sizes.size()) != k) fail("class_sizes length mismatch");
  if (static_cast<int>(table.element_orders.size()) != k) fail("element_orders length mismatch");
  if (static_cast<int>(table.irreducibles.size()) != k) fail("irreducibles must be a square matrix");
  for (const std::vector<Cyclotomic>& row : table.irreducibles)
    if (static_cast<int>(row.size()) != k) fail("irreducibles must be a square matrix");
  if (static_cast<int>(table.degrees.size()) != k) fail("degrees length mismatch");
  if (e < 1) fail("exponent must be positive");
  if (table.group_order < 1) fail("group order must be positive");

  Int size_sum = 0;
  for (std::int64_t s : table.class_sizes) {
    if (s < 1) fail("class sizes must be positive");
    if (table.group_order % s != 0) fail("class size must divide the group order");
    size_sum += s;
  }
  if (size_sum != table.group_order) fail("class sizes must sum to the group order");
  if (table.class_sizes[0] != 1) fail("identity class must have size 1");
  if (table.element_orders[0] != 1) fail("identity class must have element order 1");
  std::int64_t lcm_orders = 1;
  for (std::int64_t o : table.element_orders) {
    if (o < 1) fail("element orders must be positive");
    if (e % o != 0) fail("element orders must divide the exponent");
    lcm_orders = std::lcm(lcm_orders, o);
  }
  if (lcm_orders != e) fail("exponent must be the lcm of the element orders");

  if (static_cast<std::int64_t>(table.power_maps.size()) != e)
    fail("power_maps must cover every residue mod the exponent");
  for (const std::vector<int>& m : table.power_maps) {
    if (static_cast<int>(m.size()) != k) fail("power map length mismatch");
    for (int c : m)
      if (c < 0 || c >= k) fail("power map image out of range");
  }
  for (int j = 0; j < k; ++j)
    if (table.power_maps[0][j] != 0) fail("zeroth power map must send every class to the identity class");
  if (e > 1)
    for (int j = 0; j < k; ++j)
      if (table.power_maps[1][j] != j) fail("first power map must be the identity map");
  for (int j = 0; j < k; ++j) {
    const std::int64_t o = table.element_orders[j];
    if (table.power_maps[o % e][j] != 0) fail("power map inconsistent with element orders");
  }

  for (int r = 0; r < k; ++r) {
    if (table.degrees[r] < 1) fail("degrees must be positive integers");
    for (int j = 0; j < k; ++j) {
      const Cyclotomic& v = table.irreducibles[r][j];
      if (e % v.order() != 0) fail("character value order must divide the exponent");
      if (!v.integrality().algebraic_integer) fail("character values must be algebraic integers");
    }
  }

  Int degree_square_sum = 0;
  for (const Int& d : table.degrees) degree_square_sum += d * d;
  if (degree_square_sum != table.group_order)
    fail("degree squares must sum to the group order");
  for (int j = 0; j < k; ++j)
    if (!is_exact_integer(table.irreducibles[0][j], 1)) fail("row 0 must be the trivial character");
  for (int r = 0; r < k; ++r)
    if (!is_exact_integer(table.irreducibles[r][0], table.degrees[r]))
      fail("column 0 must hold the degrees");

  for (int r = 0; r < k; ++r)
    for (int s = 0; s <= r; ++s) {
      Cyclotomic acc = Cyclotomic::zero(1);
      for (int j = 0; j < k; ++j)
        acc = acc + Cyclotomic::from_rational(Rat(table.class_sizes[j]), 1) *
                        table.irreducibles[r][j] * table.irreducibles[s][j].conj();
      const Cyclotomic want =
          Cyclotomic::from_rational(r == s ? Rat(table.group_order) : Rat(0), 1);
      if (!(acc == want)) fail("row orthogonality fails");
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      Cyclotomic acc = Cyclotomic::zero(1);
      for (int r = 0; r < k; ++r)
        acc = acc + table.irreducibles[r][i] * table.irreducibles[r][j].conj();
      const Cyclotomic want = Cyclotomic::from_rational(
          i == j ? Rat(table.group_order, table.class_sizes[i]) : Rat(0), 1);
      if (!(acc == want)) fail("column orthogonality fails");
    }

  std::vector<int> expected_linear;
  for (int r = 0; r < k; ++r)
    if (table.degrees[r] == 1) expected_linear.push_back(r);
  if (table.linear_indices != expected_linear)
    fail("linear_indices must list exactly the degree-1 rows");

  for (std::int64_t t = 1; t < e; ++t) {
    if (std::gcd(t, e) != 1) continue;
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < k; ++j) {
        const Cyclotomic mapped = table.irreducibles[r][j].galois(t);
        if (!(mapped == table.irreducibles[r][table.power_maps[t][j]]))
          fail("Galois action must match the power maps");
      }
  }
}

}  // namespace qf

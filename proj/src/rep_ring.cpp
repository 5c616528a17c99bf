#include "qf/rep_ring.hpp"

#include <algorithm>
#include <functional>

#include "qf/errors.hpp"
#include "qf/int_matrix.hpp"

namespace qf {

void Representation::validate() const {
  if (!table) throw Error("representation has no table");
  if (static_cast<int>(mults.size()) != table->num_classes)
    throw Error("representation multiplicity vector has the wrong length");
  for (const Int& m : mults)
    if (m < 0) throw Error("representation multiplicities must be non-negative");
  if (dimension() < 1) throw Error("representation dimension must be at least 1");
}

Int Representation::dimension() const {
  Int n = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) n += mults[i] * table->degrees[i];
  return n;
}

VirtualCharacter Representation::as_virtual() const { return VirtualCharacter{table, mults}; }

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (!a || !b) return false;
  if (a == b) return true;
  return a->group_order == b->group_order && a->num_classes == b->num_classes &&
         a->exponent == b->exponent && a->class_sizes == b->class_sizes &&
         a->degrees == b->degrees;
}

ClassFunction to_class_function(const VirtualCharacter& v) {
  const CharacterTable& t = *v.table;
  if (static_cast<int>(v.coords.size()) != t.num_classes)
    throw Error("coordinate vector has the wrong length");
  ClassFunction f{v.table, {}};
  f.values.reserve(t.num_classes);
  for (int j = 0; j < t.num_classes; ++j) {
    Cyclotomic acc = Cyclotomic::zero(1);
    for (int i = 0; i < t.num_classes; ++i) {
      if (v.coords[i] == 0) continue;
      acc = acc + Cyclotomic::from_rational(Rat(v.coords[i]), 1) * t.irreducibles[i][j];
    }
    f.values.push_back(std::move(acc));
  }
  return f;
}

namespace {

// (1/|G|) sum over classes of |C_j| f(g_j) conj(chi_r(g_j)).
Cyclotomic inner_with_row(const CharacterTable& t, const std::vector<Cyclotomic>& values, int r) {
  Cyclotomic acc = Cyclotomic::zero(1);
  for (int j = 0; j < t.num_classes; ++j)
    acc = acc + Cyclotomic::from_rational(Rat(t.class_sizes[j]), 1) * values[j] *
                    t.irreducibles[r][j].conj();
  return acc * Cyclotomic::from_rational(Rat(1, t.group_order), 1);
}

}  // namespace

Decomposition from_class_function(const ClassFunction& f) {
  const CharacterTable& t = *f.table;
  if (static_cast<int>(f.values.size()) != t.num_classes)
    throw Error("class function has the wrong length");
  VirtualCharacter v{f.table, {}};
  v.coords.reserve(t.num_classes);
  for (int r = 0; r < t.num_classes; ++r) {
    Cyclotomic c = inner_with_row(t, f.values, r);
    if (!c.integrality().rational_integer) return Decomposition{{}, r, std::move(c)};
    v.coords.push_back(rat_num(c.rational_value()));
  }
  return Decomposition{std::move(v), -1, Cyclotomic::zero(1)};
}

VirtualCharacter mul(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (!same_table(a.table, b.table)) throw InternalError("product across different tables");
  const ClassFunction fa = to_class_function(a);
  const ClassFunction fb = to_class_function(b);
  ClassFunction prod{a.table, {}};
  prod.values.reserve(fa.values.size());
  for (std::size_t j = 0; j < fa.values.size(); ++j) prod.values.push_back(fa.values[j] * fb.values[j]);
  Decomposition d = from_class_function(prod);
  if (!d.character) throw InternalError("product of virtual characters failed to decompose");
  return *std::move(d.character);
}

VirtualCharacter trivial_character(const TablePtr& table) {
  VirtualCharacter v{table, std::vector<Int>(table->num_classes, 0)};
  v.coords[0] = 1;
  return v;
}

VirtualCharacter one_minus(const Representation& rep) {
  VirtualCharacter v{rep.table, {}};
  v.coords.reserve(rep.mults.size());
  for (const Int& m : rep.mults) v.coords.push_back(-m);
  v.coords[0] += 1;
  return v;
}

bool is_faithful(const Representation& rep) {
  const ClassFunction f = to_class_function(rep.as_virtual());
  const Cyclotomic dim = Cyclotomic::from_rational(Rat(rep.dimension()), 1);
  for (std::size_t j = 1; j < f.values.size(); ++j)
    if (f.values[j] == dim) return false;
  return true;
}

UnitCheck is_unit(const VirtualCharacter& v) {
  const ClassFunction f = to_class_function(v);
  for (std::size_t j = 0; j < f.values.size(); ++j)
    if (f.values[j].is_zero()) {
      UnitCheck out;
      out.failure = UnitCheck::Failure::ZeroValue;
      out.zero_class = static_cast<int>(j);
      return out;
    }
  // A value of absolute norm other than +-1 cannot have an algebraic-integer
  // reciprocal, so the inverse could never decompose integrally. Checking the
  // norms first skips the expensive decomposition for almost all non-units.
  for (const Cyclotomic& value : f.values) {
    const Rat n = value.absolute_norm();
    if (n != 1 && n != -1) {
      UnitCheck out;
      out.failure = UnitCheck::Failure::NonIntegralInverse;
      return out;
    }
  }
  ClassFunction inv{v.table, {}};
  inv.values.reserve(f.values.size());
  for (const Cyclotomic& value : f.values) inv.values.push_back(value.invert());
  Decomposition d = from_class_function(inv);
  if (!d.character) {
    UnitCheck out;
    out.failure = UnitCheck::Failure::NonIntegralInverse;
    return out;
  }
  UnitCheck out;
  out.inverse = *std::move(d.character);
  return out;
}

bool FockCoverage::complete() const {
  return std::all_of(first_power.begin(), first_power.end(),
                     [](const std::optional<int>& e) { return e.has_value(); });
}

FockCoverage fock_coverage(const Representation& rep, std::optional<int> kmax) {
  rep.validate();
  const CharacterTable& t = *rep.table;
  const ClassFunction chi = to_class_function(rep.as_virtual());

  int bound;
  if (kmax) {
    if (*kmax < 0) throw Error("kmax must be non-negative");
    bound = *kmax;
  } else {
    std::vector<const Cyclotomic*> distinct;
    for (const Cyclotomic& value : chi.values) {
      const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                    [&value](const Cyclotomic* d) { return *d == value; });
      if (!seen) distinct.push_back(&value);
    }
    bound = static_cast<int>(distinct.size()) - 1;
  }

  FockCoverage out;
  out.kmax_used = bound;
  out.first_power.assign(t.num_classes, std::nullopt);

  std::vector<Cyclotomic> power(t.num_classes, Cyclotomic::one(1));
  for (int k = 0;; ++k) {
    for (int r = 0; r < t.num_classes; ++r) {
      if (out.first_power[r]) continue;
      const Cyclotomic c = inner_with_row(t, power, r);
      if (!c.integrality().rational_integer || c.rational_value() < 0)
        throw InternalError("tensor power multiplicity is not a non-negative integer");
      if (c.rational_value() > 0) out.first_power[r] = k;
    }
    if (k >= bound || out.complete()) break;
    for (int j = 0; j < t.num_classes; ++j) power[j] = power[j] * chi.values[j];
  }
  return out;
}

KGroups equivariant_k_groups(const Representation& rep) {
  rep.validate();
  const int k = rep.table->num_classes;
  const VirtualCharacter d = one_minus(rep);
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    VirtualCharacter basis{rep.table, std::vector<Int>(k, 0)};
    basis.coords[i] = 1;
    const VirtualCharacter image = mul(d, basis);
    for (int j = 0; j < k; ++j) m.at(j, i) = image.coords[j];
  }
  const SnfResult s = snf(m);
  KGroups out;
  for (const Int& factor : s.factors)
    if (factor > 1) out.torsion.push_back(factor);
  out.free_rank = k - s.rank;
  out.k1_rank = k - s.rank;
  return out;
}

std::vector<VirtualCharacter> trivial_units(const TablePtr& table) {
  std::vector<VirtualCharacter> out;
  for (int idx : table->linear_indices) {
    VirtualCharacter plus{table, std::vector<Int>(table->num_classes, 0)};
    plus.coords[idx] = 1;
    VirtualCharacter minus{table, std::vector<Int>(table->num_classes, 0)};
    minus.coords[idx] = -1;
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
  }
  return out;
}

std::int64_t scan_graded_lex(int length, int height, std::int64_t limit,
                             const std::function<bool(std::span<const std::int64_t>)>& visit) {
  if (height < 0 || limit < 1) throw Error("scan bounds must be positive");
  std::vector<std::int64_t> v(length, 0);
  std::int64_t visited = 0;
  bool stop = false;

  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (stop) return;
    if (pos == length) {
      if (remaining != 0) return;
      ++visited;
      if (!visit(v) || visited >= limit) stop = true;
      return;
    }
    const int tail_capacity = (length - pos - 1) * height;
    const int cap = std::min(remaining, height);
    for (int val = -cap; val <= cap && !stop; ++val) {
      const int used = val < 0 ? -val : val;
      if (remaining - used > tail_capacity) continue;
      v[pos] = val;
      rec(pos + 1, remaining - used);
    }
    v[pos] = 0;
  };

  const int max_grade = length * height;
  for (int grade = 0; grade <= max_grade && !stop; ++grade) rec(0, grade);
  return visited;
}

std::vector<VirtualCharacter> enumerate_units(const TablePtr& table, int height,
                                              std::int64_t limit) {
  if (height < 1 || limit < 1) throw Error("height and limit must be positive");
  const int k = table->num_classes;
  std::vector<std::int64_t> degs(k);
  for (int i = 0; i < k; ++i) degs[i] = static_cast<std::int64_t>(table->degrees[i]);
  std::vector<VirtualCharacter> found;
  scan_graded_lex(k, height, limit, [&](std::span<const std::int64_t> coords) {
    // The value at the identity class is a plain integer, so checking it first
    // rejects most of the box without touching cyclotomic arithmetic. The
    // remaining classes are evaluated one at a time with the same zero and
    // norm tests is_unit applies, bailing at the first failure.
    std::int64_t dim = 0;
    for (int i = 0; i < k; ++i) dim += coords[i] * degs[i];
    if (dim != 1 && dim != -1) return true;
    for (int j = 1; j < k; ++j) {
      Cyclotomic acc = Cyclotomic::zero(1);
      for (int i = 0; i < k; ++i) {
        if (coords[i] == 0) continue;
        acc = acc + Cyclotomic::from_rational(Rat(coords[i]), 1) * table->irreducibles[i][j];
      }
      if (acc.is_zero()) return true;
      const Rat n = acc.absolute_norm();
      if (n != 1 && n != -1) return true;
    }
    VirtualCharacter v{table, {}};
    v.coords.assign(coords.begin(), coords.end());
    if (is_unit(v).ok()) found.push_back(std::move(v));
    return true;
  });
  return found;
}

}  // namespace qf

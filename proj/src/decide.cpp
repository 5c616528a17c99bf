#include "qf/decide.hpp"

#include <algorithm>
#include <utility>

#include "qf/errors.hpp"
#include "qf/int_matrix.hpp"

namespace qf {

void DecideConfig::validate() const {
  if (height_bound < 1) throw Error("height bound must be positive");
  if (candidate_limit < 1) throw Error("candidate limit must be positive");
}

namespace {

std::vector<int> vanishing_set(const ClassFunction& f) {
  std::vector<int> v;
  for (std::size_t j = 0; j < f.values.size(); ++j)
    if (f.values[j].is_zero()) v.push_back(static_cast<int>(j));
  return v;
}

Int abs_norm(const Cyclotomic& value) {
  const Rat n = value.absolute_norm();
  if (rat_den(n) != 1) throw InternalError("norm of an algebraic integer must be an integer");
  Int out = rat_num(n);
  if (out < 0) out = -out;
  return out;
}

Int scaled_to_int(const Rat& q, const Int& scale) {
  const Int den = rat_den(q);
  if (scale % den != 0) throw InternalError("denominator clearing failed");
  return rat_num(q) * (scale / den);
}

// Exact linear system for the unit coordinates on the non-vanishing
// classes: one block of power-basis equations per class outside V.
struct DegenerateSystem {
  std::vector<int> outside;
  IntMatrix a;
  std::vector<Int> b;
};

DegenerateSystem build_system(const TablePtr& table, const ClassFunction& f1,
                              const ClassFunction& f2, const std::vector<int>& vanishing) {
  const CharacterTable& t = *table;
  const std::int64_t e = t.exponent;
  const int k = t.num_classes;

  DegenerateSystem sys;
  for (int j = 0; j < k; ++j)
    if (!std::binary_search(vanishing.begin(), vanishing.end(), j)) sys.outside.push_back(j);

  const std::size_t phi = Cyclotomic::one(e).coords().size();
  sys.a = IntMatrix(static_cast<int>(sys.outside.size() * phi), k);
  sys.b.assign(sys.outside.size() * phi, 0);

  int row = 0;
  for (int j : sys.outside) {
    const Cyclotomic ratio = (f2.values[j] / f1.values[j]).lifted(e);
    std::vector<std::vector<Rat>> lhs(k);
    for (int i = 0; i < k; ++i) lhs[i] = t.irreducibles[i][j].lifted(e).coords();
    for (std::size_t l = 0; l < phi; ++l, ++row) {
      Int scale = rat_den(ratio.coords()[l]);
      for (int i = 0; i < k; ++i) scale = lcm(scale, rat_den(lhs[i][l]));
      for (int i = 0; i < k; ++i) sys.a.at(row, i) = scaled_to_int(lhs[i][l], scale);
      sys.b[row] = scaled_to_int(ratio.coords()[l], scale);
    }
  }
  return sys;
}

Verdict certified_conjugate(VirtualCharacter witness, VirtualCharacter inverse,
                            const Representation& rep1, const Representation& rep2) {
  if (!verify_witness(witness, rep1, rep2))
    throw InternalError("candidate witness failed final verification");
  return Conjugate{std::move(witness), std::move(inverse)};
}

}  // namespace

Verdict decide(const TablePtr& table, const Representation& rep1, const Representation& rep2,
               const DecideConfig& config) {
  config.validate();
  if (!same_table(table, rep1.table) || !same_table(table, rep2.table))
    throw Error("decide requires both representations over the given table");
  rep1.validate();
  rep2.validate();

  const Int n1 = rep1.dimension();
  const Int n2 = rep2.dimension();
  if (n1 != n2)
    throw HypothesisError(HypothesisError::Kind::DimensionMismatch,
                          "representation dimensions differ: " + n1.str() + " vs " + n2.str());
  if (n1 < 2)
    throw HypothesisError(HypothesisError::Kind::DimensionTooSmall,
                          "the criterion needs dimension at least 2, got " + n1.str());
  if (!is_faithful(rep1))
    throw HypothesisError(HypothesisError::Kind::NotFaithful,
                          "first representation is not faithful");
  if (!is_faithful(rep2))
    throw HypothesisError(HypothesisError::Kind::NotFaithful,
                          "second representation is not faithful");

  const VirtualCharacter d1 = one_minus(rep1);
  const VirtualCharacter d2 = one_minus(rep2);
  const ClassFunction f1 = to_class_function(d1);
  const ClassFunction f2 = to_class_function(d2);

  std::vector<int> v1 = vanishing_set(f1);
  std::vector<int> v2 = vanishing_set(f2);
  if (v1 != v2)
    return NotConjugate{obstruction::VanishingSetMismatch{std::move(v1), std::move(v2)}};
  const std::vector<int>& vanishing = v1;

  // Unit values have absolute norm 1, so unequal value norms obstruct
  // conjugacy. Classes where one side already has norm 1 are left to the
  // later stages, which report the sharper forced-unit certificate.
  for (int j = 0; j < table->num_classes; ++j) {
    if (std::binary_search(vanishing.begin(), vanishing.end(), j)) continue;
    Int a1 = abs_norm(f1.values[j]);
    Int a2 = abs_norm(f2.values[j]);
    if (a1 != a2 && a1 != 1 && a2 != 1)
      return NotConjugate{obstruction::NormMismatch{j, std::move(a1), std::move(a2)}};
  }

  if (vanishing.empty()) {
    // Every class pins the unit value, so the ratio decides outright.
    std::vector<Cyclotomic> forced;
    forced.reserve(f1.values.size());
    for (std::size_t j = 0; j < f1.values.size(); ++j)
      forced.push_back(f2.values[j] / f1.values[j]);
    Decomposition dec = from_class_function(ClassFunction{table, forced});
    if (!dec.character)
      return NotConjugate{obstruction::ForcedUnitNotVirtual{std::move(forced), dec.first_bad_index,
                                                            std::move(dec.first_bad_value)}};
    UnitCheck check = is_unit(*dec.character);
    if (!check.ok())
      return NotConjugate{
          obstruction::ForcedUnitNotUnit{*std::move(dec.character), check.failure, check.zero_class}};
    return certified_conjugate(*std::move(dec.character), *std::move(check.inverse), rep1, rep2);
  }

  KGroups groups1 = equivariant_k_groups(rep1);
  KGroups groups2 = equivariant_k_groups(rep2);
  if (!(groups1 == groups2))
    return NotConjugate{obstruction::KTheoryMismatch{std::move(groups1), std::move(groups2)}};

  // Identical sides always admit the trivial witness; report it rather
  // than whatever particular solution the solver happens to produce.
  if (rep1.mults == rep2.mults) {
    const VirtualCharacter one = trivial_character(table);
    return certified_conjugate(one, one, rep1, rep2);
  }

  const DegenerateSystem sys = build_system(table, f1, f2, vanishing);
  const std::optional<IntegralSolution> solution = solve_integral(sys.a, sys.b);
  if (!solution) return NotConjugate{obstruction::NoIntegralSolution{}};

  const int rank = static_cast<int>(solution->kernel_basis.size());
  const int k = table->num_classes;
  std::optional<VirtualCharacter> witness;
  std::optional<VirtualCharacter> inverse;
  const std::int64_t tested =
      scan_graded_lex(rank, config.height_bound, config.candidate_limit,
                      [&](std::span<const std::int64_t> m) {
                        VirtualCharacter u{table, solution->particular};
                        for (int i = 0; i < rank; ++i) {
                          if (m[i] == 0) continue;
                          for (int c = 0; c < k; ++c)
                            u.coords[c] += Int(m[i]) * solution->kernel_basis[i][c];
                        }
                        UnitCheck check = is_unit(u);
                        if (!check.ok()) return true;
                        witness = std::move(u);
                        inverse = *std::move(check.inverse);
                        return false;
                      });
  if (witness) return certified_conjugate(*std::move(witness), *std::move(inverse), rep1, rep2);
  return Unknown{tested, config.height_bound, rank};
}

bool verify_witness(const VirtualCharacter& u, const Representation& rep1,
                    const Representation& rep2) {
  if (!same_table(u.table, rep1.table) || !same_table(u.table, rep2.table)) return false;
  if (!is_unit(u).ok()) return false;
  return mul(u, one_minus(rep1)).coords == one_minus(rep2).coords;
}

bool recheck_obstruction(const Obstruction& obstruction, const Representation& rep1,
                         const Representation& rep2) {
  const TablePtr table = rep1.table;
  const ClassFunction f1 = to_class_function(one_minus(rep1));
  const ClassFunction f2 = to_class_function(one_minus(rep2));

  return std::visit(
      [&](const auto& record) -> bool {
        using T = std::decay_t<decltype(record)>;
        if constexpr (std::is_same_v<T, obstruction::DimensionMismatch>) {
          return record.n1 == rep1.dimension() && record.n2 == rep2.dimension() &&
                 record.n1 != record.n2;
        } else if constexpr (std::is_same_v<T, obstruction::NotFaithful>) {
          return !is_faithful(record.which == 1 ? rep1 : rep2);
        } else if constexpr (std::is_same_v<T, obstruction::VanishingSetMismatch>) {
          return record.v1 == vanishing_set(f1) && record.v2 == vanishing_set(f2) &&
                 record.v1 != record.v2;
        } else if constexpr (std::is_same_v<T, obstruction::NormMismatch>) {
          const int j = record.class_index;
          if (j < 0 || j >= table->num_classes) return false;
          return record.norm1 == abs_norm(f1.values[j]) &&
                 record.norm2 == abs_norm(f2.values[j]) && record.norm1 != record.norm2;
        } else if constexpr (std::is_same_v<T, obstruction::KTheoryMismatch>) {
          return record.groups1 == equivariant_k_groups(rep1) &&
                 record.groups2 == equivariant_k_groups(rep2) &&
                 !(record.groups1 == record.groups2);
        } else if constexpr (std::is_same_v<T, obstruction::ForcedUnitNotVirtual>) {
          if (!vanishing_set(f1).empty() || !vanishing_set(f2).empty()) return false;
          std::vector<Cyclotomic> forced;
          for (std::size_t j = 0; j < f1.values.size(); ++j)
            forced.push_back(f2.values[j] / f1.values[j]);
          if (forced.size() != record.forced_values.size()) return false;
          for (std::size_t j = 0; j < forced.size(); ++j)
            if (!(forced[j] == record.forced_values[j])) return false;
          const Decomposition dec = from_class_function(ClassFunction{table, forced});
          return !dec.character && dec.first_bad_index == record.bad_index &&
                 dec.first_bad_value == record.bad_coordinate;
        } else if constexpr (std::is_same_v<T, obstruction::ForcedUnitNotUnit>) {
          const UnitCheck check = is_unit(record.forced);
          if (check.ok() || check.failure != record.reason) return false;
          // The recorded candidate must really be the pointwise ratio.
          return mul(record.forced, one_minus(rep1)).coords == one_minus(rep2).coords;
        } else {
          static_assert(std::is_same_v<T, obstruction::NoIntegralSolution>);
          const std::vector<int> v = vanishing_set(f1);
          if (v != vanishing_set(f2)) return false;
          const DegenerateSystem sys = build_system(table, f1, f2, v);
          return !solve_integral(sys.a, sys.b).has_value();
        }
      },
      obstruction);
}

}  // namespace qf

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qf/rep_ring.hpp"

namespace qf {

struct DecideConfig {
  int height_bound = 8;
  std::int64_t candidate_limit = 200000;

  void validate() const;  // both positive
};

// Obstruction certificates. Each variant records the exact values needed to
// re-derive the contradiction independently of the pipeline run.
namespace obstruction {

struct DimensionMismatch {
  Int n1, n2;
};
struct NotFaithful {
  int which;  // 1 or 2
};
struct VanishingSetMismatch {
  std::vector<int> v1, v2;  // classes where 1-[pi_j] vanishes, ascending
};
struct NormMismatch {
  int class_index;
  Int norm1, norm2;  // |absolute norm| of the two values at that class
};
struct KTheoryMismatch {
  KGroups groups1, groups2;
};
struct ForcedUnitNotVirtual {
  std::vector<Cyclotomic> forced_values;  // pointwise ratio d2/d1
  int bad_index;
  Cyclotomic bad_coordinate;
};
struct ForcedUnitNotUnit {
  VirtualCharacter forced;
  UnitCheck::Failure reason;
  int zero_class;  // -1 unless reason is ZeroValue
};
struct NoIntegralSolution {};

}  // namespace obstruction

using Obstruction =
    std::variant<obstruction::DimensionMismatch, obstruction::NotFaithful,
                 obstruction::VanishingSetMismatch, obstruction::NormMismatch,
                 obstruction::KTheoryMismatch, obstruction::ForcedUnitNotVirtual,
                 obstruction::ForcedUnitNotUnit, obstruction::NoIntegralSolution>;

struct Conjugate {
  VirtualCharacter witness;
  VirtualCharacter inverse;
};
struct NotConjugate {
  Obstruction obstruction;
};
struct Unknown {
  std::int64_t candidates_tested;
  int height_bound;
  int lattice_rank;
};
using Verdict = std::variant<Conjugate, NotConjugate, Unknown>;

// Decides whether 1-[rep1] and 1-[rep2] differ by a unit of the
// representation ring, i.e. whether the induced quasi-free actions are
// conjugate. Hypothesis failures (dimension mismatch, dimension < 2,
// non-faithful input) throw HypothesisError instead of returning a verdict.
Verdict decide(const TablePtr& table, const Representation& rep1, const Representation& rep2,
               const DecideConfig& config = {});

// True iff u is a unit and u * (1 - [rep1]) = 1 - [rep2] exactly.
bool verify_witness(const VirtualCharacter& u, const Representation& rep1,
                    const Representation& rep2);

// Re-derives the recorded contradiction from scratch; true iff it holds.
bool recheck_obstruction(const Obstruction& obstruction, const Representation& rep1,
                         const Representation& rep2);

}  // namespace qf

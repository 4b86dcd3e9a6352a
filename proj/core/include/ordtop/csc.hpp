#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/pairing.hpp"

namespace ordtop {

/// Indexed family of basic opens with a refinement function. index_domain
/// decides the index set I; basic_member(i, x) decides x in U_i; refine is
/// the function k with x in U_{k(x,i,j)} subseteq U_i cap U_j whenever x is
/// in U_i cap U_j; point_cover names a basic open around each point.
struct StrongBase {
  std::function<bool(Nat)> index_domain;
  std::function<bool(Nat, Nat)> basic_member;
  std::function<Nat(Nat, Nat, Nat)> refine;
  std::function<Nat(Nat)> point_cover;
};

/// A countable second-countable space: point enumeration plus a strong base.
struct CscSpace {
  std::function<std::optional<Nat>(Nat)> points;
  std::function<bool(Nat)> point_member;
  StrongBase base;
};

/// h(n) emits a finite set of basic-open indices per stage; the coded open
/// set is the union of U_i over all stages and emitted i.
using OpenSetCode = std::function<std::vector<Nat>(Nat)>;

/// h2(m, n) emits the n-th stage of the m-th open set of the sequence.
using HonestSequence = std::function<std::vector<Nat>(Nat, Nat)>;

/// stream(m, n) emits finite sets of points: the m-th set of the sequence as
/// a uniformly enumerable subset of X. Openness of each set is a trusted
/// input assumption, not checked.
using EnumerableCover = std::function<std::vector<Nat>(Nat, Nat)>;

/// Decidable predicate picking out exactly the finite index sets whose
/// basic opens cover the whole space.
struct FiniteCoverRelation {
  std::function<bool(const std::vector<Nat>&)> covers;
};

struct BaseAxiomReport {
  struct Violation {
    Nat x;
    Nat i;
    Nat j;  // unused for point-cover violations
    std::string what;
  };
  std::vector<Violation> violations;
  Nat points_checked = 0;
  Nat indices_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Verifies both strong-base axioms on the first point_sample points and on
/// the indices below index_sample that lie in the index domain. The subset
/// half of the refinement axiom is checked relative to the sampled points.
/// Violations are data, not errors.
BaseAxiomReport check_base_axioms(const CscSpace& space, Nat point_sample, Nat index_sample);

/// Semi-decides x in G_h by scanning stages n < budget. Returns the first
/// witnessing (stage, index), or nullopt for "unknown within budget".
std::optional<std::pair<Nat, Nat>> open_member(const OpenSetCode& code, Nat x, Nat budget,
                                               const CscSpace& space);

/// A double-indexed honest sequence flattened into a single index stream g:
/// g(pair3(m,n,s)) is the (s+1)-th smallest member of h2(m,n) when that set
/// is large enough, and the fallback index otherwise. origin maps each
/// flattened position to an (m,n) cell containing its index.
struct FlattenedCover {
  std::function<Nat(Nat)> g;
  std::function<std::pair<Nat, Nat>(Nat)> origin;
  Nat fallback_index;
  std::pair<Nat, Nat> fallback_cell;
};

/// Builds the flattening. The fallback index is the least member of the
/// first non-empty cell in pair2-code order, scanning at most scan_budget
/// cells; throws std::runtime_error if every scanned cell is empty.
FlattenedCover honest_flatten(const HonestSequence& h2, Nat scan_budget = 4096);

/// Stage bound M = 1 + max{m : p < P} over the flattened positions' origins,
/// so the first M honest sets absorb the P-element flattened prefix.
Nat subcover_stage_bound(Nat P, const FlattenedCover& flat);

/// True iff d assigns each of the first `sample` points an index in I whose
/// basic open contains that point and no other sampled point.
bool is_discrete_witness(const CscSpace& space, const std::function<Nat(Nat)>& d, Nat sample);

/// Rewrites an honest sequence as a uniformly enumerable sequence of point
/// sets: stage pair2(n, j) of set m emits the j-th point if it lies in some
/// U_i with i in h2(m, n), and nothing otherwise.
EnumerableCover honest_to_enumerable(const HonestSequence& h2, const CscSpace& space);

/// Semi-decides x in the m-th set of the cover within budget stages;
/// returns the witnessing stage.
std::optional<Nat> enumerable_member(const EnumerableCover& cover, Nat m, Nat x, Nat budget);

}  // namespace ordtop

#include "ordtop/csc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordtop {
namespace {

std::vector<Nat> sampled_points(const CscSpace& space, Nat point_sample) {
  std::vector<Nat> pts;
  for (Nat j = 0; j < point_sample; ++j) {
    const std::optional<Nat> p = space.points(j);
    if (!p) break;
    pts.push_back(*p);
  }
  return pts;
}

std::vector<Nat> sampled_indices(const CscSpace& space, Nat index_sample) {
  std::vector<Nat> idx;
  for (Nat i = 0; i < index_sample; ++i) {
    if (space.base.index_domain(i)) idx.push_back(i);
  }
  return idx;
}

}  // namespace

BaseAxiomReport check_base_axioms(const CscSpace& space, Nat point_sample, Nat index_sample) {
  BaseAxiomReport report;
  const std::vector<Nat> pts = sampled_points(space, point_sample);
  const std::vector<Nat> idx = sampled_indices(space, index_sample);
  report.points_checked = pts.size();
  report.indices_checked = idx.size();

  for (Nat x : pts) {
    const Nat i = space.base.point_cover(x);
    if (!space.base.index_domain(i)) {
      report.violations.push_back({x, i, 0, "point_cover index outside the index domain"});
    } else if (!space.base.basic_member(i, x)) {
      report.violations.push_back({x, i, 0, "point not in its point_cover basic open"});
    }
  }

  for (Nat x : pts) {
    for (Nat i : idx) {
      if (!space.base.basic_member(i, x)) continue;
      for (Nat j : idx) {
        if (!space.base.basic_member(j, x)) continue;
        const Nat k = space.base.refine(x, i, j);
        if (!space.base.index_domain(k)) {
          report.violations.push_back({x, i, j, "refine index outside the index domain"});
          continue;
        }
        if (!space.base.basic_member(k, x)) {
          report.violations.push_back({x, i, j, "x not in its refinement basic open"});
          continue;
        }
        for (Nat y : pts) {
          if (space.base.basic_member(k, y) &&
              !(space.base.basic_member(i, y) && space.base.basic_member(j, y))) {
            report.violations.push_back({x, i, j, "refinement not inside the intersection"});
            break;
          }
        }
      }
    }
  }
  return report;
}

std::optional<std::pair<Nat, Nat>> open_member(const OpenSetCode& code, Nat x, Nat budget,
                                               const CscSpace& space) {
  for (Nat n = 0; n < budget; ++n) {
    for (Nat i : code(n)) {
      if (space.base.index_domain(i) && space.base.basic_member(i, x)) {
        return std::make_pair(n, i);
      }
    }
  }
  return std::nullopt;
}

FlattenedCover honest_flatten(const HonestSequence& h2, Nat scan_budget) {
  std::optional<Nat> fallback;
  std::pair<Nat, Nat> fallback_cell{0, 0};
  for (Nat p = 0; p < scan_budget && !fallback; ++p) {
    const auto [m, n] = unpair2(p);
    std::vector<Nat> cell = h2(m, n);
    if (!cell.empty()) {
      fallback = *std::min_element(cell.begin(), cell.end());
      fallback_cell = {m, n};
    }
  }
  if (!fallback) throw std::runtime_error("honest_flatten: no fallback index found");

  FlattenedCover flat;
  flat.fallback_index = *fallback;
  flat.fallback_cell = fallback_cell;
  flat.g = [h2, fb = *fallback](Nat p) -> Nat {
    const auto [m, n, s] = unpair3(p);
    std::vector<Nat> cell = h2(m, n);
    if (cell.size() >= s + 1) {
      std::sort(cell.begin(), cell.end());
      return cell[s];
    }
    return fb;
  };
  flat.origin = [h2, fallback_cell](Nat p) -> std::pair<Nat, Nat> {
    const auto [m, n, s] = unpair3(p);
    if (h2(m, n).size() >= s + 1) return {m, n};
    return fallback_cell;
  };
  return flat;
}

Nat subcover_stage_bound(Nat P, const FlattenedCover& flat) {
  Nat bound = 0;
  for (Nat p = 0; p < P; ++p) {
    bound = std::max(bound, flat.origin(p).first + 1);
  }
  return bound;
}

bool is_discrete_witness(const CscSpace& space, const std::function<Nat(Nat)>& d, Nat sample) {
  const std::vector<Nat> pts = sampled_points(space, sample);
  for (Nat x : pts) {
    const Nat i = d(x);
    if (!space.base.index_domain(i)) return false;
    if (!space.base.basic_member(i, x)) return false;
    for (Nat y : pts) {
      if (y != x && space.base.basic_member(i, y)) return false;
    }
  }
  return true;
}

EnumerableCover honest_to_enumerable(const HonestSequence& h2, const CscSpace& space) {
  return [h2, space](Nat m, Nat stage) -> std::vector<Nat> {
    const auto [n, j] = unpair2(stage);
    const std::optional<Nat> point = space.points(j);
    if (!point) return {};
    for (Nat i : h2(m, n)) {
      if (space.base.index_domain(i) && space.base.basic_member(i, *point)) return {*point};
    }
    return {};
  };
}

std::optional<Nat> enumerable_member(const EnumerableCover& cover, Nat m, Nat x, Nat budget) {
  for (Nat n = 0; n < budget; ++n) {
    const std::vector<Nat> stage = cover(m, n);
    if (std::find(stage.begin(), stage.end(), x) != stage.end()) return n;
  }
  return std::nullopt;
}

}  // namespace ordtop

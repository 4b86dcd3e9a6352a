#include "ordtop/injection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ordtop {
namespace {

// Whether some s <= limit has f(s) = n, with duplicate detection on the
// scanned segment.
bool hits_below(const std::function<Nat(Nat)>& f, Nat n, Nat limit) {
  std::set<Nat> seen;
  bool hit = false;
  for (Nat s = 0; s <= limit; ++s) {
    const Nat v = f(s);
    if (!seen.insert(v).second) throw std::invalid_argument("injection_space: f is not injective");
    if (v == n) hit = true;
  }
  return hit;
}

}  // namespace

Nat injection_index_encode(const InjectionIndex& idx) {
  switch (idx.tag) {
    case 0: return pair2(0, idx.a);
    case 1: return pair2(1, pair2(idx.a, idx.b));
    case 2: return pair2(2, idx.a);
    default: throw std::invalid_argument("injection_index_encode: bad tag");
  }
}

std::optional<InjectionIndex> injection_index_decode(Nat code) {
  const auto [tag, payload] = unpair2(code);
  if (tag > 2) return std::nullopt;
  if (tag == 1) {
    const auto [n, s] = unpair2(payload);
    return InjectionIndex{1, n, s};
  }
  return InjectionIndex{tag, payload, 0};
}

CscSpace injection_space(std::function<Nat(Nat)> f) {
  CscSpace space;
  space.points = [](Nat j) -> std::optional<Nat> { return j; };
  space.point_member = [](Nat) { return true; };

  space.base.index_domain = [](Nat code) { return injection_index_decode(code).has_value(); };

  space.base.basic_member = [f](Nat code, Nat x) {
    const std::optional<InjectionIndex> idx = injection_index_decode(code);
    if (!idx) return false;
    switch (idx->tag) {
      case 0: return x == idx->a || hits_below(f, idx->a, x);
      case 1: return f(idx->b) == idx->a && x == idx->a;
      default: return x >= idx->a;
    }
  };

  space.base.point_cover = [](Nat x) { return injection_index_encode({2, x, 0}); };

  // Case analysis on the tags of the two indices. Helpful fact: if x is in
  // the tag-0 set of n but x != n, then the whole tail {t : t >= x} is too.
  space.base.refine = [f](Nat x, Nat ci, Nat cj) -> Nat {
    const std::optional<InjectionIndex> di = injection_index_decode(ci);
    const std::optional<InjectionIndex> dj = injection_index_decode(cj);
    if (!di || !dj) throw std::invalid_argument("refine: index outside the index domain");
    const InjectionIndex i = *di, j = *dj;

    if (i.tag == 0 && j.tag == 0) {
      const Nat m = i.a, n = j.a;
      if (m == n) return injection_index_encode({0, m, 0});
      if (x == m || x == n) {
        if (hits_below(f, x, x)) return injection_index_encode({2, x, 0});
        return injection_index_encode({0, x, 0});
      }
      return injection_index_encode({2, x, 0});
    }
    if (i.tag == 0 && j.tag == 1) return cj;
    if (i.tag == 1 && j.tag == 0) return ci;
    if ((i.tag == 0 && j.tag == 2) || (i.tag == 2 && j.tag == 0)) {
      const Nat m = i.tag == 0 ? i.a : j.a;
      if (x == m) {
        if (hits_below(f, x, x)) return injection_index_encode({2, x, 0});
        return injection_index_encode({0, x, 0});
      }
      return injection_index_encode({2, x, 0});
    }
    if (i.tag == 1) return ci;  // tag-1 sets are singletons or empty
    if (j.tag == 1) return cj;
    return injection_index_encode({2, std::max(i.a, j.a), 0});
  };

  return space;
}

RangeDecodeResult range_decode(const std::function<Nat(Nat)>& f,
                               const std::function<Nat(Nat)>& cover_indices, Nat n, Nat budget) {
  RangeDecodeResult result;
  for (Nat m = 0; m < budget; ++m) {
    result.stages_scanned = m + 1;
    const std::optional<InjectionIndex> idx = injection_index_decode(cover_indices(m));
    if (!idx) throw std::invalid_argument("range_decode: index outside the index domain");
    if (idx->tag == 2)
      throw std::invalid_argument("range_decode: tail index; not a finite-basic cover");
    if (idx->tag == 1 && idx->a == n && f(idx->b) == n) {
      result.status = RangeStatus::in_range;
      result.witness = idx->b;
      return result;
    }
    if (idx->tag == 0 && idx->a == n) {
      result.status = RangeStatus::not_in_range;
      return result;
    }
  }
  result.status = RangeStatus::unknown;
  return result;
}

}  // namespace ordtop

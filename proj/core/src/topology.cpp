#include "ordtop/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <stdexcept>

namespace ordtop {

Nat ext_encode(const ExtPoint& p) {
  switch (p.kind()) {
    case ExtPoint::Kind::neg_inf: return 0;
    case ExtPoint::Kind::pos_inf: return 1;
    case ExtPoint::Kind::point: return p.value() + 2;
  }
  return 0;
}

ExtPoint ext_decode(Nat code) {
  if (code == 0) return ExtPoint::neg_inf();
  if (code == 1) return ExtPoint::pos_inf();
  return ExtPoint::point(code - 2);
}

Nat interval_index(const Interval& iv) { return pair2(ext_encode(iv.lo), ext_encode(iv.hi)); }

Interval interval_from_index(Nat code) {
  const auto [lo, hi] = unpair2(code);
  return Interval{ext_decode(lo), ext_decode(hi)};
}

OrderedSpace ordered_space(const OrderPresentation& ord) {
  if (!ord.carrier(0)) throw std::invalid_argument("ordered_space: empty carrier");
  const auto valid_ext = [ord](Nat c) { return c < 2 || ord.contains(c - 2); };

  OrderedSpace os;
  os.ord = ord;
  os.space.points = ord.carrier;
  os.space.point_member = ord.contains;
  os.space.base.index_domain = [valid_ext](Nat code) {
    const auto [u, v] = unpair2(code);
    return valid_ext(u) && valid_ext(v);
  };
  os.space.base.basic_member = [ord, valid_ext](Nat code, Nat x) {
    const auto [u, v] = unpair2(code);
    if (!valid_ext(u) || !valid_ext(v) || !ord.contains(x)) return false;
    return interval_contains(Interval{ext_decode(u), ext_decode(v)}, x, ord);
  };
  os.space.base.refine = [ord](Nat x, Nat ci, Nat cj) -> Nat {
    (void)x;  // the refinement never consults the point
    const Interval a = interval_from_index(ci);
    const Interval b = interval_from_index(cj);
    const ExtPoint lo = ext_less(a.lo, b.lo, ord) ? b.lo : a.lo;
    const ExtPoint hi = ext_less(a.hi, b.hi, ord) ? a.hi : b.hi;
    return interval_index(Interval{lo, hi});
  };
  os.space.base.point_cover = [](Nat) {
    return interval_index(Interval{ExtPoint::neg_inf(), ExtPoint::pos_inf()});
  };
  return os;
}

FiniteCoverRelation finite_cover_relation(const OrderedSpace& os) {
  FiniteCoverRelation rel;
  rel.covers = [os](const std::vector<Nat>& indices) {
    std::vector<Interval> ivs;
    ivs.reserve(indices.size());
    for (Nat code : indices) {
      if (!os.space.base.index_domain(code))
        throw std::invalid_argument("finite_cover_relation: index outside the index domain");
      ivs.push_back(interval_from_index(code));
    }
    return finite_cover_check(os, ivs);
  };
  return rel;
}

std::optional<Nat> uncovered_witness(const OrderedSpace& os, const std::vector<Interval>& F) {
  const OrderPresentation& ord = os.ord;
  const auto covered = [&](Nat x) {
    return std::any_of(F.begin(), F.end(),
                       [&](const Interval& iv) { return interval_contains(iv, x, ord); });
  };

  if (const std::optional<Nat> n = finite_size(ord)) {
    for (Nat x : carrier_prefix(ord, *n)) {
      if (!covered(x)) return x;
    }
    return std::nullopt;
  }

  if (!ord.between || !ord.above || !ord.below)
    throw std::runtime_error("undecidable without oracles");

  std::vector<Nat> endpoints;
  for (const Interval& iv : F) {
    if (iv.lo.is_point()) endpoints.push_back(iv.lo.value());
    if (iv.hi.is_point()) endpoints.push_back(iv.hi.value());
  }
  std::sort(endpoints.begin(), endpoints.end(),
            [&](Nat a, Nat b) { return ord.less(a, b); });
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

  if (endpoints.empty()) {
    for (const Interval& iv : F) {
      if (iv.lo.kind() == ExtPoint::Kind::neg_inf && iv.hi.kind() == ExtPoint::Kind::pos_inf)
        return std::nullopt;
    }
    return ord.carrier(0);
  }

  // Coverage is constant strictly between consecutive endpoints, below the
  // least endpoint, and above the greatest, so one witness per region
  // decides the region.
  for (Nat e : endpoints) {
    if (!covered(e)) return e;
  }
  for (Nat t = 0; t + 1 < endpoints.size(); ++t) {
    const std::optional<Nat> w = ord.between(endpoints[t], endpoints[t + 1]);
    if (w && !covered(*w)) return w;
  }
  if (const std::optional<Nat> w = ord.below(endpoints.front()); w && !covered(*w)) return w;
  if (const std::optional<Nat> w = ord.above(endpoints.back()); w && !covered(*w)) return w;
  return std::nullopt;
}

bool finite_cover_check(const OrderedSpace& os, const std::vector<Interval>& F) {
  return !uncovered_witness(os, F).has_value();
}

CoverStream cover_from_intervals(std::vector<Interval> intervals) {
  auto shared = std::make_shared<std::vector<Interval>>(std::move(intervals));
  CoverStream stream;
  stream.size = shared->size();
  stream.at = [shared](Nat i) -> Interval {
    if (i >= shared->size()) throw std::out_of_range("cover stream index out of range");
    return (*shared)[i];
  };
  return stream;
}

CoverStream cover_from_gap(const OrderPresentation& ord, const GapCertificate& cert) {
  CoverStream stream;
  stream.size = ord.size;
  stream.at = [ord, cert](Nat j) -> Interval {
    const std::optional<Nat> c = ord.carrier(j);
    if (!c) throw std::out_of_range("cover_from_gap: carrier enumeration exhausted");
    const bool lo = cert.cut.lower(*c);
    const bool up = cert.cut.upper(*c);
    if (lo == up) throw std::runtime_error("cover_from_gap: certificate parts do not partition");
    if (lo) return Interval{ExtPoint::neg_inf(), ExtPoint::point(*c)};
    return Interval{ExtPoint::point(*c), ExtPoint::pos_inf()};
  };
  return stream;
}

bool is_linkage(const std::vector<Interval>& chain, const OrderPresentation& ord) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const ExtPoint& b = chain[i].hi;
    if (!ext_less(chain[i + 1].lo, b, ord)) return false;
    if (!ext_less(b, chain[i + 1].hi, ord)) return false;
  }
  return true;
}

bool linkage_member(const std::vector<Interval>& chain, Nat x, const OrderPresentation& ord) {
  return std::any_of(chain.begin(), chain.end(),
                     [&](const Interval& iv) { return interval_contains(iv, x, ord); });
}

LinkageTreeParams make_linkage_params(OrderPresentation ord, CoverStream cover, Nat probe) {
  LinkageTreeParams params;
  params.cover = std::move(cover);

  const std::optional<Nat> n = finite_size(ord, std::max<Nat>(probe, 4096));
  const std::vector<Nat> sample = carrier_prefix(ord, n ? *n : probe);
  if (!sample.empty()) {
    Nat least = sample[0], greatest = sample[0];
    for (Nat x : sample) {
      if (ord.less(x, least)) least = x;
      if (ord.less(greatest, x)) greatest = x;
    }
    if (n) {
      params.min_element = least;
      params.max_element = greatest;
    } else {
      if (ord.below && !ord.below(least)) params.min_element = least;
      if (ord.above && !ord.above(greatest)) params.max_element = greatest;
    }
  }
  params.ord = std::move(ord);
  return params;
}

bool check_linkage_params(const LinkageTreeParams& params, Nat sample) {
  if (!params.min_element || !params.max_element) return false;
  if (!params.ord.contains(*params.min_element) || !params.ord.contains(*params.max_element))
    return false;
  for (Nat x : carrier_prefix(params.ord, sample)) {
    if (params.ord.less(x, *params.min_element)) return false;
    if (params.ord.less(*params.max_element, x)) return false;
  }
  return true;
}

namespace {

struct ReachState {
  std::vector<Interval> intervals;           // the scanned cover prefix
  std::vector<Nat> reach_order;              // indices in BFS order
  std::map<Nat, std::optional<Nat>> parent;  // reached index -> predecessor
};

ReachState reach_from(const OrderPresentation& ord, const CoverStream& cover, Nat scan,
                      Nat start_member) {
  ReachState state;
  if (cover.size) scan = std::min(scan, *cover.size);
  state.intervals.reserve(scan);
  for (Nat m = 0; m < scan; ++m) state.intervals.push_back(cover.at(m));

  std::deque<Nat> queue;
  for (Nat m = 0; m < scan; ++m) {
    if (interval_contains(state.intervals[m], start_member, ord)) {
      state.parent.emplace(m, std::nullopt);
      state.reach_order.push_back(m);
      queue.push_back(m);
    }
  }
  while (!queue.empty()) {
    const Nat m = queue.front();
    queue.pop_front();
    const ExtPoint top = state.intervals[m].hi;
    if (!top.is_point()) continue;  // nothing chains past +inf
    for (Nat m2 = 0; m2 < scan; ++m2) {
      if (state.parent.count(m2)) continue;
      if (ext_less(state.intervals[m2].lo, top, ord) &&
          ext_less(top, state.intervals[m2].hi, ord)) {
        state.parent.emplace(m2, m);
        state.reach_order.push_back(m2);
        queue.push_back(m2);
      }
    }
  }
  return state;
}

std::vector<Nat> chain_to(const ReachState& state, Nat index) {
  std::vector<Nat> chain;
  std::optional<Nat> cursor = index;
  while (cursor) {
    chain.push_back(*cursor);
    cursor = state.parent.at(*cursor);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool covered_by_reached(const ReachState& state, Nat x, const OrderPresentation& ord) {
  return std::any_of(state.reach_order.begin(), state.reach_order.end(), [&](Nat m) {
    return interval_contains(state.intervals[m], x, ord);
  });
}

}  // namespace

std::set<Nat> linkage_reachable(const LinkageTreeParams& params, Nat n) {
  std::set<Nat> members;
  if (!params.min_element) return members;
  const ReachState state = reach_from(params.ord, params.cover, n, *params.min_element);
  for (Nat x = 0; x < n; ++x) {
    if (params.ord.contains(x) && covered_by_reached(state, x, params.ord)) members.insert(x);
  }
  return members;
}

std::optional<std::vector<Nat>> find_finite_subcover(const OrderedSpace& os,
                                                     const CoverStream& cover, Nat scan) {
  const OrderPresentation& ord = os.ord;
  const std::optional<Nat> n = finite_size(ord);
  if (!n) throw std::invalid_argument("find_finite_subcover: order not finite");
  const std::vector<Nat> members = carrier_prefix(ord, *n);
  if (members.empty()) throw std::invalid_argument("find_finite_subcover: empty carrier");

  Nat least = members[0], greatest = members[0];
  for (Nat x : members) {
    if (ord.less(x, least)) least = x;
    if (ord.less(greatest, x)) greatest = x;
  }
  const ReachState state = reach_from(ord, cover, scan, least);
  for (Nat m : state.reach_order) {
    if (interval_contains(state.intervals[m], greatest, ord)) return chain_to(state, m);
  }
  return std::nullopt;
}

bool linkage_tree_member(const LinkageTreeParams& params, const std::vector<bool>& sigma) {
  if (!params.min_element || !params.max_element)
    throw std::invalid_argument("linkage_tree_member: designated endpoints required");
  const OrderPresentation& ord = params.ord;
  const Nat n = sigma.size();

  if (*params.min_element < n && !sigma[*params.min_element]) return false;
  if (*params.max_element < n && sigma[*params.max_element]) return false;
  for (Nat x = 0; x < n; ++x) {
    if (!ord.contains(x) && sigma[x]) return false;
  }
  for (Nat x = 0; x < n; ++x) {
    if (!ord.contains(x)) continue;
    for (Nat y = 0; y < n; ++y) {
      if (!ord.contains(y)) continue;
      if (ord.less(x, y) && sigma[y] && !sigma[x]) return false;
    }
  }
  for (Nat code = 0; code < n; ++code) {
    const std::vector<Nat> indices = seq_decode(code);
    if (params.cover.size &&
        std::any_of(indices.begin(), indices.end(), [&](Nat i) { return i >= *params.cover.size; }))
      continue;
    std::vector<Interval> chain;
    chain.reserve(indices.size());
    for (Nat i : indices) chain.push_back(params.cover.at(i));
    if (!is_linkage(chain, ord)) continue;
    for (Nat x = 0; x < n; ++x) {
      if (!ord.contains(x) || sigma[x] || !linkage_member(chain, x, ord)) continue;
      for (Nat y = 0; y < n; ++y) {
        if (!ord.contains(y) || !sigma[y]) continue;
        if (linkage_member(chain, y, ord)) return false;  // x must have been 1
      }
    }
  }
  return true;
}

DichotomyResult gap_finder(const LinkageTreeParams& params, Nat budget) {
  const OrderPresentation& ord = params.ord;
  DichotomyResult result;
  result.stage = budget;

  std::vector<Nat> sample;
  for (Nat x = 0; x < budget; ++x) {
    if (ord.contains(x)) sample.push_back(x);
  }

  // A missing endpoint is already an incompleteness witness.
  if (!params.min_element) {
    result.upper = sample;
    return result;
  }
  if (!params.max_element) {
    result.lower = sample;
    return result;
  }

  const ReachState state = reach_from(ord, params.cover, 2 * budget, *params.min_element);
  for (Nat m : state.reach_order) {
    if (interval_contains(state.intervals[m], *params.max_element, ord)) {
      result.kind = DichotomyResult::Kind::subcover;
      result.subcover = chain_to(state, m);
      return result;
    }
  }
  for (Nat x : sample) {
    if (covered_by_reached(state, x, ord)) result.lower.push_back(x);
    else result.upper.push_back(x);
  }
  return result;
}

}  // namespace ordtop

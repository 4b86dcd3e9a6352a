#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ordtop/csc.hpp"
#include "ordtop/order.hpp"

namespace ordtop {

/// Index coding for ordered spaces: an extended point codes as 0 (-inf),
/// 1 (+inf), or x+2 (the carrier member x); an interval index is
/// pair2(ext_encode(lo), ext_encode(hi)).
Nat ext_encode(const ExtPoint& p);
ExtPoint ext_decode(Nat code);
Nat interval_index(const Interval& iv);
Interval interval_from_index(Nat code);

/// The order topology of ord as a countable second-countable space: indices
/// are pairs of extended points, U_<a,b> is the open interval (a, b), and
/// the refinement takes the pointwise max of left endpoints and min of
/// right endpoints (it never consults the point).
struct OrderedSpace {
  OrderPresentation ord;
  CscSpace space;
};

/// Throws std::invalid_argument on an empty carrier.
OrderedSpace ordered_space(const OrderPresentation& ord);

/// The finite cover relation of an ordered space's base.
FiniteCoverRelation finite_cover_relation(const OrderedSpace& os);

/// A carrier member not covered by any interval of F, if one is detectable.
/// Finite orders are checked by exhaustion. Infinite orders require the
/// between/above/below oracles: it suffices to check the interval endpoints
/// plus one witness in each endpoint gap and beyond the extreme endpoints.
/// Throws std::runtime_error("undecidable without oracles") when the order
/// is infinite and an oracle is missing.
std::optional<Nat> uncovered_witness(const OrderedSpace& os, const std::vector<Interval>& F);

/// True iff every carrier member lies in some interval of F.
bool finite_cover_check(const OrderedSpace& os, const std::vector<Interval>& F);

/// An indexed stream of intervals; at(i) for i < size when size is present.
struct CoverStream {
  std::function<Interval(Nat)> at;
  std::optional<Nat> size;
};

CoverStream cover_from_intervals(std::vector<Interval> intervals);

/// The cover witnessing that a gap makes the order topology non-compact:
/// position j emits (-inf, c) when the j-th carrier member c is in the lower
/// part and (c, +inf) when it is in the upper part. Every member is covered,
/// and no finite prefix covers the order. Throws std::runtime_error if the
/// certificate's parts fail to partition an enumerated member.
CoverStream cover_from_gap(const OrderPresentation& ord, const GapCertificate& cert);

/// The chaining condition: for consecutive intervals (a,b), (a',b') of the
/// sequence, a' < b < b' in the extended order.
bool is_linkage(const std::vector<Interval>& chain, const OrderPresentation& ord);

/// x lies in some interval of the chain.
bool linkage_member(const std::vector<Interval>& chain, Nat x, const OrderPresentation& ord);

/// An order with designated least and greatest members plus a cover stream,
/// the setting of the linkage tree. make_linkage_params locates the
/// endpoints: by exhaustion for finite orders, and for infinite orders by
/// scanning the first probe members and confirming with the above/below
/// oracles; an endpoint that cannot be confirmed stays unset.
struct LinkageTreeParams {
  OrderPresentation ord;
  CoverStream cover;
  std::optional<Nat> min_element;
  std::optional<Nat> max_element;
};

LinkageTreeParams make_linkage_params(OrderPresentation ord, CoverStream cover, Nat probe = 64);

/// True iff the designated endpoints exist and bound the first
/// sample carrier members.
bool check_linkage_params(const LinkageTreeParams& params, Nat sample);

/// The set of carrier members x < n joined to the minimum by a linkage of
/// cover intervals with indices below n: breadth-first closure starting from
/// the intervals containing the minimum, extending by the chaining
/// condition, collecting covered members.
std::set<Nat> linkage_reachable(const LinkageTreeParams& params, Nat n);

/// Indices of a linkage joining the order's minimum to its maximum among the
/// cover indices below scan, or nullopt. For a finite order whose cover is
/// fully scanned this finds a finite subcover exactly when one exists; the
/// returned chain's union is an interval containing both endpoints, hence
/// all of L. Throws std::invalid_argument if the order is not finite.
std::optional<std::vector<Nat>> find_finite_subcover(const OrderedSpace& os,
                                                     const CoverStream& cover, Nat scan);

/// Membership of a binary string in the linkage tree: sigma(min) = 1,
/// sigma(max) = 0, zeros off the carrier, downward closure under the order,
/// and closure under linkages whose index sequences are coded below
/// |sigma| (sequence coding from pairing.hpp).
bool linkage_tree_member(const LinkageTreeParams& params, const std::vector<bool>& sigma);

/// Outcome of the staged dichotomy: either a finite subcover (chain indices
/// in linkage order) or the stage-n cut splitting reached members from
/// unreached ones. The cut vectors list the sampled members ascending by
/// natural value.
struct DichotomyResult {
  enum class Kind { subcover, staged_cut };
  Kind kind = Kind::staged_cut;
  std::vector<Nat> subcover;
  std::vector<Nat> lower;
  std::vector<Nat> upper;
  Nat stage = 0;
};

/// Runs the reachable-set approximation: samples carrier members below
/// budget and scans cover indices below 2*budget. Reaching the maximum
/// yields the witnessing chain as a subcover; otherwise the reached sample
/// is the staged lower part. A missing designated minimum (resp. maximum)
/// short-circuits to the staged cut with empty lower (resp. empty upper)
/// part, the endpoint-missing incompleteness witness. Exact on finite
/// orders when the cover is fully scanned.
DichotomyResult gap_finder(const LinkageTreeParams& params, Nat budget);

}  // namespace ordtop

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ordtop/pairing.hpp"

namespace ordtop {

/// A point of L extended with the two fresh endpoints -inf and +inf.
class ExtPoint {
 public:
  enum class Kind : std::uint8_t { neg_inf, point, pos_inf };

  static ExtPoint neg_inf() { return ExtPoint(Kind::neg_inf, 0); }
  static ExtPoint pos_inf() { return ExtPoint(Kind::pos_inf, 0); }
  static ExtPoint point(Nat x) { return ExtPoint(Kind::point, x); }

  Kind kind() const { return kind_; }
  bool is_point() const { return kind_ == Kind::point; }
  Nat value() const { return value_; }

  bool operator==(const ExtPoint&) const = default;

 private:
  ExtPoint(Kind kind, Nat value) : kind_(kind), value_(value) {}
  Kind kind_;
  Nat value_;
};

/// Basic open interval (lo, hi). Reversed or equal endpoints are legal and
/// denote the empty set.
struct Interval {
  ExtPoint lo;
  ExtPoint hi;
};

/// A cut of the order: complementary membership predicates for the lower
/// part A- and the upper part A+.
struct Cut {
  std::function<bool(Nat)> lower;
  std::function<bool(Nat)> upper;
};

/// Evidence that a cut is a gap: A- has no maximum and A+ has no minimum.
/// no_max_witness maps a in A- to a strictly larger member of A-;
/// no_min_witness maps b in A+ to a strictly smaller member of A+.
struct GapCertificate {
  Cut cut;
  std::function<Nat(Nat)> no_max_witness;
  std::function<Nat(Nat)> no_min_witness;
};

/// A countable linear order given by oracles over the naturals.
///
/// carrier(j) enumerates the members (injective; nullopt once a finite
/// enumeration is exhausted). contains and less are total decidable oracles
/// on carrier members. between/above/below are optional: an empty
/// std::function means the oracle is not supplied; when supplied, nullopt
/// means "no such member exists".
struct OrderPresentation {
  std::function<std::optional<Nat>(Nat)> carrier;
  std::function<bool(Nat)> contains;
  std::function<bool(Nat, Nat)> less;
  std::function<std::optional<Nat>(Nat, Nat)> between;
  std::function<std::optional<Nat>(Nat)> above;
  std::function<std::optional<Nat>(Nat)> below;
  std::optional<GapCertificate> gap;
  std::optional<Nat> size;
};

/// Extends ord.less to ExtPoint: -inf below every point, +inf above.
/// Throws std::invalid_argument if a point payload is not a carrier member.
std::strong_ordering ext_compare(const ExtPoint& p, const ExtPoint& q,
                                 const OrderPresentation& ord);

inline bool ext_less(const ExtPoint& p, const ExtPoint& q, const OrderPresentation& ord) {
  return ext_compare(p, q, ord) == std::strong_ordering::less;
}

/// x in (lo, hi), i.e. lo < x < hi. Throws if x is not a carrier member.
bool interval_contains(const Interval& iv, Nat x, const OrderPresentation& ord);

/// Checks the Cut invariants (partition, and every lower member preceding
/// every upper member) on the first sample_size carrier members.
bool check_cut(const Cut& cut, const OrderPresentation& ord, Nat sample_size);

/// Checks that less is a strict total order on the first sample_size
/// carrier members (irreflexive, connected, transitive), exhaustively.
bool check_strict_total_order(const OrderPresentation& ord, Nat sample_size);

/// Decides completeness of a finite order by enumerating all 2^n cut
/// candidates and checking each valid cut for a boundary element. True for
/// every non-empty finite order. Throws std::invalid_argument on an empty
/// carrier and on carriers too large to enumerate.
bool is_complete_finite(const OrderPresentation& ord);

/// First count carrier members, in enumeration order.
std::vector<Nat> carrier_prefix(const OrderPresentation& ord, Nat count);

/// Finite carrier size if the enumeration exhausts within probe steps.
std::optional<Nat> finite_size(const OrderPresentation& ord, Nat probe = 4096);

/// Order over explicitly listed labels; labels[j] is the j-th smallest.
OrderPresentation order_from_labels(std::vector<Nat> labels);

}  // namespace ordtop

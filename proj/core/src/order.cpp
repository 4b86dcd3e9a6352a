#include "ordtop/order.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace ordtop {

std::strong_ordering ext_compare(const ExtPoint& p, const ExtPoint& q,
                                 const OrderPresentation& ord) {
  using K = ExtPoint::Kind;
  const auto rank = [](const ExtPoint& e) {
    switch (e.kind()) {
      case K::neg_inf: return 0;
      case K::point: return 1;
      case K::pos_inf: return 2;
    }
    return 1;
  };
  if (p.is_point() && !ord.contains(p.value()))
    throw std::invalid_argument("ext_compare: payload not in carrier");
  if (q.is_point() && !ord.contains(q.value()))
    throw std::invalid_argument("ext_compare: payload not in carrier");
  if (rank(p) != rank(q)) return rank(p) <=> rank(q);
  if (!p.is_point()) return std::strong_ordering::equal;
  if (ord.less(p.value(), q.value())) return std::strong_ordering::less;
  if (ord.less(q.value(), p.value())) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool interval_contains(const Interval& iv, Nat x, const OrderPresentation& ord) {
  if (!ord.contains(x)) throw std::invalid_argument("interval_contains: x not in carrier");
  const ExtPoint px = ExtPoint::point(x);
  return ext_less(iv.lo, px, ord) && ext_less(px, iv.hi, ord);
}

bool check_cut(const Cut& cut, const OrderPresentation& ord, Nat sample_size) {
  const std::vector<Nat> sample = carrier_prefix(ord, sample_size);
  for (Nat x : sample) {
    if (cut.lower(x) == cut.upper(x)) return false;  // not a partition
  }
  for (Nat x : sample) {
    if (!cut.lower(x)) continue;
    for (Nat y : sample) {
      if (cut.upper(y) && !ord.less(x, y)) return false;
    }
  }
  return true;
}

bool check_strict_total_order(const OrderPresentation& ord, Nat sample_size) {
  const std::vector<Nat> sample = carrier_prefix(ord, sample_size);
  for (Nat a : sample) {
    if (ord.less(a, a)) return false;
    for (Nat b : sample) {
      if (a != b && ord.less(a, b) == ord.less(b, a)) return false;
      for (Nat c : sample) {
        if (ord.less(a, b) && ord.less(b, c) && !ord.less(a, c)) return false;
      }
    }
  }
  return true;
}

bool is_complete_finite(const OrderPresentation& ord) {
  const std::optional<Nat> n = ord.size ? ord.size : finite_size(ord);
  if (!n) throw std::invalid_argument("is_complete_finite: carrier not finite");
  if (*n == 0) throw std::invalid_argument("is_complete_finite: empty carrier");
  if (*n > 24) throw std::invalid_argument("is_complete_finite: carrier too large");
  const std::vector<Nat> members = carrier_prefix(ord, *n);

  for (Nat bits = 0; bits < (Nat{1} << *n); ++bits) {
    std::vector<Nat> lower, upper;
    for (Nat j = 0; j < *n; ++j) {
      if (bits & (Nat{1} << j)) lower.push_back(members[j]);
      else upper.push_back(members[j]);
    }
    bool valid_cut = true;
    for (Nat x : lower)
      for (Nat y : upper)
        if (!ord.less(x, y)) valid_cut = false;
    if (!valid_cut) continue;

    bool lower_has_max = false;
    for (Nat x : lower) {
      bool is_max = true;
      for (Nat y : lower)
        if (ord.less(x, y)) is_max = false;
      if (is_max) lower_has_max = true;
    }
    bool upper_has_min = false;
    for (Nat y : upper) {
      bool is_min = true;
      for (Nat x : upper)
        if (ord.less(x, y)) is_min = false;
      if (is_min) upper_has_min = true;
    }
    if (!lower_has_max && !upper_has_min) return false;
  }
  return true;
}

std::vector<Nat> carrier_prefix(const OrderPresentation& ord, Nat count) {
  std::vector<Nat> sample;
  for (Nat j = 0; j < count; ++j) {
    const std::optional<Nat> x = ord.carrier(j);
    if (!x) break;
    sample.push_back(*x);
  }
  return sample;
}

std::optional<Nat> finite_size(const OrderPresentation& ord, Nat probe) {
  if (ord.size) return ord.size;
  for (Nat j = 0; j < probe; ++j) {
    if (!ord.carrier(j)) return j;
  }
  return std::nullopt;
}

OrderPresentation order_from_labels(std::vector<Nat> labels) {
  auto position = std::make_shared<std::map<Nat, Nat>>();
  for (Nat j = 0; j < labels.size(); ++j) {
    if (!position->emplace(labels[j], j).second)
      throw std::invalid_argument("order_from_labels: duplicate label");
  }
  auto shared_labels = std::make_shared<std::vector<Nat>>(std::move(labels));
  const Nat n = shared_labels->size();

  OrderPresentation ord;
  ord.size = n;
  ord.carrier = [shared_labels](Nat j) -> std::optional<Nat> {
    if (j >= shared_labels->size()) return std::nullopt;
    return (*shared_labels)[j];
  };
  ord.contains = [position](Nat x) { return position->count(x) > 0; };
  ord.less = [position](Nat a, Nat b) {
    const auto ia = position->find(a);
    const auto ib = position->find(b);
    if (ia == position->end() || ib == position->end())
      throw std::invalid_argument("less: not a carrier member");
    return ia->second < ib->second;
  };
  ord.between = [shared_labels, position](Nat a, Nat b) -> std::optional<Nat> {
    const auto ia = position->find(a);
    const auto ib = position->find(b);
    if (ia == position->end() || ib == position->end())
      throw std::invalid_argument("between: not a carrier member");
    if (ia->second + 1 < ib->second) return (*shared_labels)[ia->second + 1];
    return std::nullopt;
  };
  ord.above = [shared_labels, position, n](Nat a) -> std::optional<Nat> {
    const auto ia = position->find(a);
    if (ia == position->end()) throw std::invalid_argument("above: not a carrier member");
    if (ia->second + 1 < n) return (*shared_labels)[ia->second + 1];
    return std::nullopt;
  };
  ord.below = [shared_labels, position](Nat a) -> std::optional<Nat> {
    const auto ia = position->find(a);
    if (ia == position->end()) throw std::invalid_argument("below: not a carrier member");
    if (ia->second > 0) return (*shared_labels)[ia->second - 1];
    return std::nullopt;
  };
  return ord;
}

}  // namespace ordtop

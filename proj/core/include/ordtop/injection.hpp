#pragma once

#include <functional>
#include <optional>

#include "ordtop/csc.hpp"
#include "ordtop/pairing.hpp"

namespace ordtop {

/// Decoded basic-open index of an injection space. Indices are coded as
/// pair2(tag, payload) with tag in {0,1,2}; a tag-1 payload is pair2(n, s).
///
///   tag 0, n:    {n} together with every t such that some s <= t has f(s) = n
///   tag 1, n s:  {n} if f(s) = n, empty otherwise
///   tag 2, s:    the tail {t : t >= s}
struct InjectionIndex {
  Nat tag;
  Nat a;  // n for tags 0 and 1, s for tag 2
  Nat b;  // s for tag 1
};

Nat injection_index_encode(const InjectionIndex& idx);
std::optional<InjectionIndex> injection_index_decode(Nat code);

/// The countable second-countable space attached to an injection f, with the
/// three basic-open families above and the refinement case analysis on them.
/// Points are all naturals. Membership scans that walk initial segments of f
/// throw std::invalid_argument if they observe f repeating a value.
CscSpace injection_space(std::function<Nat(Nat)> f);

enum class RangeStatus { in_range, not_in_range, unknown };

struct RangeDecodeResult {
  RangeStatus status = RangeStatus::unknown;
  Nat witness = 0;  // the s with f(s) = n, when status is in_range
  Nat stages_scanned = 0;
};

/// Reads off range membership of n from a cover of the injection space by
/// finite basic opens, scanning cover positions m < budget: an index
/// <1,<n,s>> with f(s) = n answers in_range(s); the index <0,n> answers
/// not_in_range. A tail index <2,s> anywhere in the scanned stream is
/// rejected with std::invalid_argument (the stream is not a cover by finite
/// basic opens).
RangeDecodeResult range_decode(const std::function<Nat(Nat)>& f,
                               const std::function<Nat(Nat)>& cover_indices, Nat n, Nat budget);

}  // namespace ordtop

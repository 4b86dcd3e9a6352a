#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace ordtop {

using Nat = std::uint64_t;

/// Fixed codings used everywhere in the library.
///
///   pair2(a, b)    = (a + b) * (a + b + 1) / 2 + b          (Cantor pairing)
///   pair3(m, n, s) = pair2(pair2(m, n), s)
///   seq_encode(<>) = 0
///   seq_encode(<a> ++ r) = 1 + pair2(a, seq_encode(r))
///
/// All three are bijections onto the naturals. Decoders assume codes below
/// 2^61 (desk scale); larger codes overflow the discriminant of unpair2.

constexpr Nat pair2(Nat a, Nat b) { return (a + b) * (a + b + 1) / 2 + b; }

constexpr Nat pair3(Nat m, Nat n, Nat s) { return pair2(pair2(m, n), s); }

inline Nat isqrt(Nat z) {
  if (z == 0) return 0;
  Nat x = static_cast<Nat>(std::sqrt(static_cast<double>(z)));
  while (x > 0 && x > z / x) --x;
  while ((x + 1) <= z / (x + 1)) ++x;
  return x;
}

inline std::pair<Nat, Nat> unpair2(Nat z) {
  const Nat w = (isqrt(8 * z + 1) - 1) / 2;
  const Nat t = w * (w + 1) / 2;
  const Nat b = z - t;
  return {w - b, b};
}

inline std::array<Nat, 3> unpair3(Nat z) {
  const auto [mn, s] = unpair2(z);
  const auto [m, n] = unpair2(mn);
  return {m, n, s};
}

inline Nat seq_encode(const std::vector<Nat>& seq) {
  Nat code = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) code = 1 + pair2(*it, code);
  return code;
}

inline std::vector<Nat> seq_decode(Nat code) {
  std::vector<Nat> seq;
  while (code > 0) {
    const auto [head, rest] = unpair2(code - 1);
    seq.push_back(head);
    code = rest;
  }
  return seq;
}

}  // namespace ordtop

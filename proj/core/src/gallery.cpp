#include "ordtop/gallery.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ordtop {
namespace {

// --- fixed rational coding for dense_unbounded ------------------------------
//
// Index 0 codes 0. Odd index 2k-1 codes the k-th positive rational in the
// breadth-first order of the Calkin-Wilf tree (root 1/1, node a/b with left
// child a/(a+b) and right child (a+b)/b); even index 2k codes its negative.

struct Rat {
  long long num;  // sign lives here
  long long den;  // > 0
};

Rat reduced(long long num, long long den) {
  const long long g = std::gcd(std::abs(num), den);
  return {num / g, den / g};
}

bool rat_less(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

// k-th positive rational, 1-based breadth-first Calkin-Wilf order.
Rat calkin_wilf(Nat k) {
  int top = 63;
  while (top > 0 && !(k & (Nat{1} << top))) --top;
  long long p = 1, q = 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    if (k & (Nat{1} << bit)) p += q;  // right child
    else q += p;                      // left child
  }
  return {p, q};
}

Nat calkin_wilf_index(long long p, long long q) {
  Nat k = 1;
  std::vector<bool> path;  // from the node up to the root
  while (!(p == 1 && q == 1)) {
    if (path.size() > 62) throw std::overflow_error("rational too deep to code");
    if (p < q) {
      q -= p;
      path.push_back(false);
    } else {
      p -= q;
      path.push_back(true);
    }
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) k = 2 * k + (*it ? 1 : 0);
  return k;
}

Rat rat_of_index(Nat n) {
  if (n == 0) return {0, 1};
  if (n % 2 == 1) return calkin_wilf((n + 1) / 2);
  const Rat r = calkin_wilf(n / 2);
  return {-r.num, r.den};
}

Nat index_of_rat(const Rat& r) {
  if (r.num == 0) return 0;
  if (r.num > 0) return 2 * calkin_wilf_index(r.num, r.den) - 1;
  return 2 * calkin_wilf_index(-r.num, r.den);
}

bool below_sqrt2(const Rat& r) {
  if (r.num <= 0) return true;
  return static_cast<__int128>(r.num) * r.num < 2 * static_cast<__int128>(r.den) * r.den;
}

// Pell convergent ladders: (p,q) -> (3p+4q, 2p+3q) preserves p^2 - 2q^2.
// Started from 1/1 it ascends to sqrt(2) from below; from 3/2 it descends
// from above. Both keep numerators small enough to code.
Nat witness_below_sqrt2_above(const Rat& floor_rat) {
  long long p = 1, q = 1;
  for (int step = 0; step < 64; ++step) {
    const Rat candidate{p, q};
    if (rat_less(floor_rat, candidate)) return index_of_rat(candidate);
    const long long np = 3 * p + 4 * q, nq = 2 * p + 3 * q;
    if (np < p) throw std::overflow_error("sqrt(2) ladder overflow");
    p = np;
    q = nq;
  }
  throw std::invalid_argument("no_max_witness: input not below sqrt(2)");
}

Nat witness_above_sqrt2_below(const Rat& ceil_rat) {
  long long p = 3, q = 2;
  for (int step = 0; step < 64; ++step) {
    const Rat candidate{p, q};
    if (rat_less(candidate, ceil_rat)) return index_of_rat(candidate);
    const long long np = 3 * p + 4 * q, nq = 2 * p + 3 * q;
    if (np < p) throw std::overflow_error("sqrt(2) ladder overflow");
    p = np;
    q = nq;
  }
  throw std::invalid_argument("no_min_witness: input not above sqrt(2)");
}

OrderPresentation omega_plus_one() {
  OrderPresentation ord;
  ord.carrier = [](Nat j) -> std::optional<Nat> { return j; };
  ord.contains = [](Nat) { return true; };
  ord.less = [](Nat a, Nat b) {
    if (a == b) return false;
    if (b == 0) return true;   // 0 is the maximum
    if (a == 0) return false;
    return a < b;
  };
  ord.between = [less = ord.less](Nat a, Nat b) -> std::optional<Nat> {
    if (!less(a, b)) return std::nullopt;
    if (b == 0) return a + 1;
    if (a + 1 < b) return a + 1;
    return std::nullopt;
  };
  ord.above = [](Nat a) -> std::optional<Nat> {
    if (a == 0) return std::nullopt;
    return a + 1;
  };
  ord.below = [](Nat a) -> std::optional<Nat> {
    if (a == 1) return std::nullopt;
    if (a == 0) return 1;
    return a - 1;
  };
  return ord;
}

OrderPresentation omega_plus_omega_star() {
  OrderPresentation ord;
  ord.carrier = [](Nat j) -> std::optional<Nat> { return j; };
  ord.contains = [](Nat) { return true; };
  ord.less = [](Nat a, Nat b) {
    if (a == b) return false;
    const bool ea = a % 2 == 0, eb = b % 2 == 0;
    if (ea && eb) return a < b;
    if (ea != eb) return ea;  // every even precedes every odd
    return a > b;             // odds descend
  };
  ord.between = [less = ord.less](Nat a, Nat b) -> std::optional<Nat> {
    if (!less(a, b)) return std::nullopt;
    const bool ea = a % 2 == 0, eb = b % 2 == 0;
    if (ea && eb) return a + 2 < b ? std::optional<Nat>(a + 2) : std::nullopt;
    if (ea && !eb) return a + 2;
    return b + 2 < a ? std::optional<Nat>(b + 2) : std::nullopt;
  };
  ord.above = [](Nat a) -> std::optional<Nat> {
    if (a % 2 == 0) return a + 2;
    if (a == 1) return std::nullopt;
    return a - 2;
  };
  ord.below = [](Nat a) -> std::optional<Nat> {
    if (a % 2 == 1) return a + 2;
    if (a == 0) return std::nullopt;
    return a - 2;
  };

  GapCertificate cert;
  cert.cut.lower = [](Nat x) { return x % 2 == 0; };
  cert.cut.upper = [](Nat x) { return x % 2 == 1; };
  cert.no_max_witness = [](Nat a) -> Nat {
    if (a % 2 != 0) throw std::invalid_argument("no_max_witness: not in the lower part");
    return a + 2;
  };
  cert.no_min_witness = [](Nat b) -> Nat {
    if (b % 2 != 1) throw std::invalid_argument("no_min_witness: not in the upper part");
    return b + 2;
  };
  ord.gap = cert;
  return ord;
}

OrderPresentation dense_unbounded() {
  OrderPresentation ord;
  ord.carrier = [](Nat j) -> std::optional<Nat> { return j; };
  ord.contains = [](Nat) { return true; };
  ord.less = [](Nat a, Nat b) { return rat_less(rat_of_index(a), rat_of_index(b)); };
  ord.between = [](Nat a, Nat b) -> std::optional<Nat> {
    const Rat ra = rat_of_index(a), rb = rat_of_index(b);
    if (!rat_less(ra, rb)) return std::nullopt;
    return index_of_rat(reduced(ra.num + rb.num, ra.den + rb.den));  // mediant
  };
  ord.above = [](Nat a) -> std::optional<Nat> {
    const Rat r = rat_of_index(a);
    return index_of_rat(reduced(r.num + r.den, r.den));
  };
  ord.below = [](Nat a) -> std::optional<Nat> {
    const Rat r = rat_of_index(a);
    return index_of_rat(reduced(r.num - r.den, r.den));
  };

  GapCertificate cert;
  cert.cut.lower = [](Nat x) { return below_sqrt2(rat_of_index(x)); };
  cert.cut.upper = [](Nat x) { return !below_sqrt2(rat_of_index(x)); };
  cert.no_max_witness = [](Nat a) -> Nat {
    const Rat r = rat_of_index(a);
    if (!below_sqrt2(r)) throw std::invalid_argument("no_max_witness: not in the lower part");
    return witness_below_sqrt2_above(r);
  };
  cert.no_min_witness = [](Nat b) -> Nat {
    const Rat r = rat_of_index(b);
    if (below_sqrt2(r)) throw std::invalid_argument("no_min_witness: not in the upper part");
    return witness_above_sqrt2_below(r);
  };
  ord.gap = cert;
  return ord;
}

}  // namespace

OrderPresentation gallery(const std::string& name) {
  if (name.rfind("finite(", 0) == 0 && name.back() == ')') {
    const std::string digits = name.substr(7, name.size() - 8);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("gallery: bad finite(N) name: " + name);
    const unsigned long n = std::stoul(digits);
    if (n == 0) throw std::invalid_argument("gallery: finite order must be non-empty");
    std::vector<Nat> labels(n);
    for (Nat j = 0; j < n; ++j) labels[j] = j;
    return order_from_labels(std::move(labels));
  }
  if (name == "omega_plus_one") return omega_plus_one();
  if (name == "omega_plus_omega_star") return omega_plus_omega_star();
  if (name == "dense_unbounded") return dense_unbounded();
  throw std::invalid_argument("gallery: unknown order: " + name);
}

std::vector<std::string> gallery_names() {
  return {"finite(N)", "omega_plus_one", "omega_plus_omega_star", "dense_unbounded"};
}

}  // namespace ordtop

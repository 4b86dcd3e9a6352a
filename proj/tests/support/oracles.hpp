#pragma once

// Test-only oracles, kept independent of the library paths they check:
// brute-force subset search over interval covers, exhaustive coverage by
// carrier scan, and small tree corpora for the Kleene-Brouwer machinery.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ordtop/kb.hpp"
#include "ordtop/order.hpp"
#include "ordtop/topology.hpp"

namespace ordtop::testing {

// Every interval over the endpoint alphabet L union {-inf, +inf} of
// finite(n), in a fixed order.
inline std::vector<Interval> interval_alphabet(Nat n) {
  std::vector<ExtPoint> points{ExtPoint::neg_inf(), ExtPoint::pos_inf()};
  for (Nat x = 0; x < n; ++x) points.push_back(ExtPoint::point(x));
  std::vector<Interval> alphabet;
  for (const ExtPoint& lo : points)
    for (const ExtPoint& hi : points) alphabet.push_back(Interval{lo, hi});
  return alphabet;
}

// Direct carrier scan, no endpoint reasoning.
inline bool covers_whole_order(const OrderPresentation& ord, const std::vector<Interval>& F) {
  for (Nat j = 0;; ++j) {
    const std::optional<Nat> x = ord.carrier(j);
    if (!x) return true;
    const bool hit = std::any_of(F.begin(), F.end(), [&](const Interval& iv) {
      return interval_contains(iv, *x, ord);
    });
    if (!hit) return false;
  }
}

// Smallest-first subset enumeration over the cover's index set.
inline std::optional<std::vector<Nat>> brute_force_subcover(const OrderPresentation& ord,
                                                            const std::vector<Interval>& cover) {
  const Nat k = cover.size();
  for (Nat bits = 0; bits < (Nat{1} << k); ++bits) {
    std::vector<Nat> indices;
    std::vector<Interval> chosen;
    for (Nat i = 0; i < k; ++i) {
      if (bits & (Nat{1} << i)) {
        indices.push_back(i);
        chosen.push_back(cover[i]);
      }
    }
    if (covers_whole_order(ord, chosen)) return indices;
  }
  return std::nullopt;
}

// All trees over {0,1} entries with at most max_nodes nodes (including the
// root), generated by repeatedly attaching leaves and deduplicating.
inline std::vector<std::vector<FinSeq>> all_binary_trees(Nat max_nodes) {
  std::set<std::vector<FinSeq>> seen;
  std::vector<std::vector<FinSeq>> result;
  std::vector<std::vector<FinSeq>> frontier{{FinSeq{}}};
  seen.insert(frontier[0]);
  result.push_back(frontier[0]);
  for (Nat size = 1; size < max_nodes; ++size) {
    std::vector<std::vector<FinSeq>> next;
    for (const std::vector<FinSeq>& tree : frontier) {
      for (const FinSeq& node : tree) {
        for (Nat entry = 0; entry < 2; ++entry) {
          FinSeq child = node;
          child.push_back(entry);
          if (std::find(tree.begin(), tree.end(), child) != tree.end()) continue;
          std::vector<FinSeq> grown = tree;
          grown.push_back(child);
          std::sort(grown.begin(), grown.end());
          if (seen.insert(grown).second) {
            result.push_back(grown);
            next.push_back(grown);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return result;
}

// Random bounded trees: entries < max_entry, depth <= max_depth.
inline std::vector<FinSeq> random_tree(std::mt19937& rng, Nat max_nodes, Nat max_entry,
                                       Nat max_depth) {
  std::vector<FinSeq> nodes{FinSeq{}};
  const Nat target = 1 + rng() % max_nodes;
  for (Nat attempt = 0; attempt < 8 * max_nodes && nodes.size() < target; ++attempt) {
    const FinSeq& stem = nodes[rng() % nodes.size()];
    if (stem.size() >= max_depth) continue;
    FinSeq child = stem;
    child.push_back(rng() % max_entry);
    if (std::find(nodes.begin(), nodes.end(), child) == nodes.end()) nodes.push_back(child);
  }
  return nodes;
}

}  // namespace ordtop::testing

// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordtop/csc.hpp"
#include "ordtop/gallery.hpp"
#include "ordtop/injection.hpp"
#include "ordtop/kb.hpp"
#include "ordtop/topology.hpp"
#include "../support/oracles.hpp"

using namespace ordtop;

namespace {

struct Criterion {
  bool passed = true;
  long long checks = 0;
  std::string detail;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. find_finite_subcover vs brute-force subset search, exhaustively over all
//    finite orders with 1-5 elements and all covers by <= 4 intervals.

Criterion subcover_oracle_equivalence(double time_limit) {
  Criterion crit;
  const auto start = Clock::now();
  for (Nat n = 1; n <= 5; ++n) {
    const OrderPresentation ord = gallery("finite(" + std::to_string(n) + ")");
    const OrderedSpace os = ordered_space(ord);
    const std::vector<Interval> alphabet = testing::interval_alphabet(n);
    const Nat full = (Nat{1} << n) - 1;

    // membership masks, computed once per order
    std::vector<Nat> mask(alphabet.size(), 0);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      for (Nat x = 0; x < n; ++x) {
        if (interval_contains(alphabet[i], x, ord)) mask[i] |= Nat{1} << x;
      }
    }

    std::vector<std::size_t> pick;
    const std::function<void()> sweep = [&]() {
      // one cover: the picked alphabet entries
      std::vector<Interval> cover;
      for (std::size_t i : pick) cover.push_back(alphabet[i]);

      // oracle: subset enumeration over precomputed masks
      bool oracle_found = false;
      for (Nat bits = 0; bits < (Nat{1} << pick.size()) && !oracle_found; ++bits) {
        Nat covered = 0;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          if (bits & (Nat{1} << i)) covered |= mask[pick[i]];
        }
        oracle_found = covered == full;
      }

      const auto found =
          find_finite_subcover(os, cover_from_intervals(cover), cover.size());
      crit.require(found.has_value() == oracle_found,
                   "subcover existence mismatch at n=" + std::to_string(n));
      if (found) {
        Nat covered = 0;
        for (Nat i : *found) covered |= mask[pick[i]];
        crit.require(covered == full, "returned subcover does not cover the order");
      }

      if (pick.size() == 4) return;
      const std::size_t from = pick.empty() ? 0 : pick.back() + 1;
      for (std::size_t i = from; i < alphabet.size(); ++i) {
        pick.push_back(i);
        sweep();
        pick.pop_back();
      }
    };
    sweep();
  }
  crit.require(seconds_since(start) < time_limit, "runtime limit exceeded");
  return crit;
}

// ---------------------------------------------------------------------------
// 2. every linkage's membership set is order-convex, same corpus

Criterion linkage_interval_invariant() {
  Criterion crit;
  for (Nat n = 1; n <= 5; ++n) {
    const OrderPresentation ord = gallery("finite(" + std::to_string(n) + ")");
    const std::vector<Interval> alphabet = testing::interval_alphabet(n);

    std::vector<std::size_t> chain_idx;
    const std::function<void()> extend = [&]() {
      if (!chain_idx.empty()) {
        std::vector<bool> in(n, false);
        std::vector<Interval> chain;
        for (std::size_t i : chain_idx) chain.push_back(alphabet[i]);
        for (Nat x = 0; x < n; ++x) in[x] = linkage_member(chain, x, ord);
        for (Nat x = 0; x < n; ++x)
          for (Nat y = 0; y < n; ++y) {
            if (!in[x] || !in[y] || !ord.less(x, y)) continue;
            for (Nat z = 0; z < n; ++z) {
              if (ord.less(x, z) && ord.less(z, y)) {
                crit.require(in[z], "linkage union has a hole at n=" + std::to_string(n));
              }
            }
          }
      }
      if (chain_idx.size() == 4) return;
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (!chain_idx.empty()) {
          const Interval& last = alphabet[chain_idx.back()];
          const Interval& next = alphabet[i];
          if (!(ext_less(next.lo, last.hi, ord) && ext_less(last.hi, next.hi, ord))) continue;
        }
        chain_idx.push_back(i);
        extend();
        chain_idx.pop_back();
      }
    };
    extend();
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 3. KB neighbors vs the kb_compare-sorted node list; singleton witnesses

Criterion kb_neighbor_oracle(double time_limit) {
  Criterion crit;
  const auto start = Clock::now();

  std::vector<std::vector<FinSeq>> corpus = testing::all_binary_trees(7);
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    corpus.push_back(testing::random_tree(rng, 40, 4, 5));
  }

  for (const std::vector<FinSeq>& nodes : corpus) {
    const TreePresentation tree = tree_from_list(nodes);
    const KbView view = kb_view(tree);
    const auto witness = kb_discrete_witness(view, 64);

    std::vector<FinSeq> sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), [](const FinSeq& a, const FinSeq& b) {
      return kb_compare(a, b) == std::strong_ordering::less;
    });
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      const auto pred = kb_predecessor(tree, sorted[k]);
      const auto succ = kb_successor(tree, sorted[k], 64);
      if (k == 0) crit.require(!pred.has_value(), "phantom predecessor of the KB-least node");
      else crit.require(pred == sorted[k - 1], "predecessor disagrees with sorted adjacency");
      if (k + 1 == sorted.size())
        crit.require(!succ.has_value(), "phantom successor of the KB-greatest node");
      else crit.require(succ == sorted[k + 1], "successor disagrees with sorted adjacency");

      const Interval interval = witness(sorted[k]);
      for (const FinSeq& other : sorted) {
        const bool inside = interval_contains(interval, view.encode(other), view.order);
        crit.require(inside == (other == sorted[k]),
                     "witness interval is not the singleton");
      }
    }
  }
  crit.require(seconds_since(start) < time_limit, "runtime limit exceeded");
  return crit;
}

// ---------------------------------------------------------------------------
// 4. gap pipeline on omega_plus_omega_star

Criterion gap_pipeline() {
  Criterion crit;
  const OrderPresentation ord = gallery("omega_plus_omega_star");
  const OrderedSpace os = ordered_space(ord);
  const CoverStream stream = cover_from_gap(ord, *ord.gap);

  for (Nat k = 1; k <= 30; ++k) {
    std::vector<Interval> prefix;
    for (Nat j = 0; j < k; ++j) prefix.push_back(stream.at(j));
    const std::optional<Nat> witness = uncovered_witness(os, prefix);
    crit.require(witness.has_value(), "prefix of length " + std::to_string(k) + " covers");
    if (witness) {
      for (const Interval& iv : prefix) {
        crit.require(!interval_contains(iv, *witness, ord), "witness is covered after all");
      }
    }
    crit.require(!finite_cover_check(os, prefix), "finite_cover_check accepts a prefix");
  }

  const LinkageTreeParams params = make_linkage_params(ord, stream);
  for (Nat budget = 10; budget <= 30; ++budget) {
    const DichotomyResult staged = gap_finder(params, budget);
    crit.require(staged.kind == DichotomyResult::Kind::staged_cut,
                 "gap_finder claims a subcover of the gapped order");
    std::set<Nat> lower(staged.lower.begin(), staged.lower.end());
    std::set<Nat> upper(staged.upper.begin(), staged.upper.end());
    for (Nat x = 0; x < budget; ++x) {
      const bool in_lower = lower.count(x) > 0;
      const bool in_upper = upper.count(x) > 0;
      crit.require(in_lower != in_upper, "staged cut fails to partition the sample");
      crit.require(in_lower == ord.gap->cut.lower(x),
                   "staged cut disagrees with the certified cut at " + std::to_string(x));
    }
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 5. path extraction on the builtin trees

Criterion path_extraction() {
  Criterion crit;
  const Nat steps = 25;

  const auto check_chain = [&](const TreePresentation& tree, const UpperSetOracle& upper,
                               const std::vector<FinSeq>& chain) {
    crit.require(chain.size() == steps + 1, "chain is not 25 extensions long");
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      crit.require(chain[k + 1].size() == chain[k].size() + 1 &&
                       is_prefix(chain[k], chain[k + 1]),
                   "chain does not strictly extend");
      crit.require(tree.member(chain[k + 1]), "chain leaves the tree");
      crit.require(upper.in_upper(chain[k + 1]), "chain leaves the upper part");
      const Nat m = chain[k + 1].back();
      for (Nat lower_entry = 0; lower_entry < m; ++lower_entry) {
        FinSeq sibling = chain[k];
        sibling.push_back(lower_entry);
        crit.require(!upper.in_upper(sibling), "a smaller child was available");
      }
    }
  };

  const TreePresentation zeros = builtin_tree("zeros_with_noise");
  const UpperSetOracle whole = subtree_upper_set(zeros, {});
  check_chain(zeros, whole, extract_path(zeros, whole, steps));

  const TreePresentation alt = builtin_tree("alternating_with_stubs");
  UpperSetOracle right_of_path;
  right_of_path.in_upper = [alt](const FinSeq& seq) {
    if (!alt.member(seq)) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Nat on_path = i % 2 == 0 ? 1 : 0;
      if (seq[i] != on_path) return seq[i] > on_path;
    }
    return true;
  };
  const std::vector<FinSeq> alt_chain = extract_path(alt, right_of_path, steps);
  check_chain(alt, right_of_path, alt_chain);
  for (std::size_t k = 0; k < alt_chain.size(); ++k) {
    for (std::size_t i = 0; i < alt_chain[k].size(); ++i) {
      crit.require(alt_chain[k][i] == (i % 2 == 0 ? 1u : 0u),
                   "extracted chain strays off the unique path");
    }
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 6. injection-space suite for the doubling map and a fixed-seed injection

Criterion injection_suite() {
  Criterion crit;

  std::mt19937 rng(5501);
  auto offsets = std::make_shared<std::vector<Nat>>();
  for (int i = 0; i < 256; ++i) offsets->push_back(rng() % 3);
  const std::function<Nat(Nat)> scattered = [offsets](Nat s) {
    return 3 * s + (*offsets)[s % 256];
  };
  const std::function<Nat(Nat)> doubling = [](Nat s) { return 2 * s; };

  const auto in_range_of = [](const std::function<Nat(Nat)>& f, Nat probe, Nat n) {
    for (Nat s = 0; s < probe; ++s) {
      if (f(s) == n) return true;
    }
    return false;
  };

  for (const auto& f : {doubling, scattered}) {
    const CscSpace space = injection_space(f);
    crit.require(check_base_axioms(space, 8, 12).ok(), "base axiom violation");

    // the discreteness dichotomy, sets evaluated from the formulas
    const Nat window = 140;
    for (Nat n = 0; n < 20; ++n) {
      const auto members_of = [&](const InjectionIndex& idx) {
        std::vector<Nat> members;
        for (Nat x = 0; x < window; ++x) {
          if (space.base.basic_member(injection_index_encode(idx), x)) members.push_back(x);
        }
        return members;
      };
      const bool zero_single = members_of({0, n, 0}) == std::vector<Nat>{n};
      bool one_single = false;
      for (Nat s = 0; s < 20 && !one_single; ++s) {
        one_single = members_of({1, n, s}) == std::vector<Nat>{n};
      }
      crit.require(zero_single || one_single,
                   "no singleton around " + std::to_string(n));
    }

    // range decoding against the direct range; stage m emits the witness
    // index of m when in range and the isolated-point index otherwise
    const auto canonical_cover = [f](Nat m) -> Nat {
      for (Nat s = 0; s < 200; ++s) {
        if (f(s) == m) return injection_index_encode({1, m, s});
      }
      return injection_index_encode({0, m, 0});
    };
    for (Nat n = 0; n < 50; ++n) {
      const bool direct = in_range_of(f, 100, n);
      const RangeDecodeResult decoded = range_decode(f, canonical_cover, n, 256);
      if (direct) {
        crit.require(decoded.status == RangeStatus::in_range, "missed range member");
        if (decoded.status == RangeStatus::in_range) {
          crit.require(f(decoded.witness) == n, "wrong range witness");
        }
      } else {
        crit.require(decoded.status == RangeStatus::not_in_range, "phantom range member");
      }
    }
  }
  return crit;
}

// ---------------------------------------------------------------------------
// 7. flattening over the exhaustive table family on finite(n <= 4)

Criterion flattening() {
  Criterion crit;
  for (Nat n = 1; n <= 4; ++n) {
    const OrderedSpace os = ordered_space(gallery("finite(" + std::to_string(n) + ")"));
    const Nat whole = interval_index({ExtPoint::neg_inf(), ExtPoint::pos_inf()});
    const Nat low = interval_index({ExtPoint::neg_inf(), ExtPoint::point(n - 1)});
    const Nat up = interval_index({ExtPoint::point(0), ExtPoint::pos_inf()});
    const std::vector<std::vector<Nat>> palette{{}, {low}, {up, whole}};

    for (Nat rows = 1; rows <= 3; ++rows) {
      for (Nat cols = 1; cols <= 3; ++cols) {
        Nat assignments = 1;
        for (Nat c = 0; c < rows * cols; ++c) assignments *= palette.size();
        for (Nat a = 0; a < assignments; ++a) {
          Nat digits = a;
          std::vector<std::vector<Nat>> cells(rows * cols);
          for (auto& cell : cells) {
            cell = palette[digits % palette.size()];
            digits /= palette.size();
          }
          const HonestSequence h2 = [&cells, rows, cols](Nat m, Nat nn) -> std::vector<Nat> {
            if (m < rows && nn < cols) return cells[m * cols + nn];
            return {};
          };

          // direct coverage of the honest sequence
          std::vector<bool> direct(n, false);
          std::vector<std::vector<bool>> row_covers(rows, std::vector<bool>(n, false));
          for (Nat m = 0; m < rows; ++m)
            for (Nat c = 0; c < cols; ++c)
              for (Nat i : h2(m, c))
                for (Nat x = 0; x < n; ++x)
                  if (os.space.base.basic_member(i, x)) {
                    direct[x] = true;
                    row_covers[m][x] = true;
                  }

          bool all_empty = true;
          for (const auto& cell : cells) all_empty &= cell.empty();
          if (all_empty) {
            bool covers_nothing = true;
            for (Nat x = 0; x < n; ++x) covers_nothing &= !direct[x];
            bool threw = false;
            try {
              honest_flatten(h2, 64);
            } catch (const std::runtime_error&) {
              threw = true;
            }
            crit.require(covers_nothing && threw,
                         "empty table should cover nothing and have no fallback");
            continue;
          }

          const FlattenedCover flat = honest_flatten(h2);
          const Nat scan = pair3(rows, cols, 2) + 1;
          std::vector<bool> via_g(n, false);
          for (Nat x = 0; x < n; ++x)
            for (Nat p = 0; p < scan && !via_g[x]; ++p)
              if (os.space.base.basic_member(flat.g(p), x)) via_g[x] = true;
          for (Nat x = 0; x < n; ++x) {
            crit.require(via_g[x] == direct[x], "flattened coverage differs at a point");
          }

          // absorption: the first M honest sets cover whatever the first P
          // flattened sets cover
          for (const Nat P : {Nat{0}, Nat{1}, Nat{5}, scan}) {
            const Nat M = subcover_stage_bound(P, flat);
            crit.require(M <= rows, "stage bound overshoots the table");
            for (Nat x = 0; x < n; ++x) {
              bool by_prefix = false;
              for (Nat p = 0; p < P && !by_prefix; ++p) {
                by_prefix = os.space.base.basic_member(flat.g(p), x);
              }
              if (!by_prefix) continue;
              bool by_rows = false;
              for (Nat m = 0; m < M && !by_rows; ++m) by_rows = row_covers[m][x];
              crit.require(by_rows, "absorption fails: stage bound too small");
            }
          }
        }
      }
    }
  }
  return crit;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries{
      {"1. subcover oracle equivalence (orders 1-5, covers <= 4 intervals)",
       [] { return subcover_oracle_equivalence(60.0); }},
      {"2. linkage unions are order-convex (same corpus)",
       [] { return linkage_interval_invariant(); }},
      {"3. kb neighbors match sorted adjacency; witness singletons",
       [] { return kb_neighbor_oracle(30.0); }},
      {"4. gap pipeline on omega_plus_omega_star (prefixes and staged cuts)",
       [] { return gap_pipeline(); }},
      {"5. path extraction: 25 leftmost-in-upper extensions on both builtins",
       [] { return path_extraction(); }},
      {"6. injection-space suite (doubling and a fixed-seed injection)",
       [] { return injection_suite(); }},
      {"7. flattening coverage and stage-bound absorption (exhaustive tables)",
       [] { return flattening(); }},
  };

  int failed = 0;
  for (const Entry& entry : entries) {
    const auto start = Clock::now();
    Criterion crit;
    try {
      crit = entry.run();
    } catch (const std::exception& error) {
      crit.passed = false;
      crit.detail = std::string("exception: ") + error.what();
    }
    const double elapsed = seconds_since(start);
    if (crit.passed) {
      std::printf("[PASS] %s  (%lld checks, %.2fs)\n", entry.label, crit.checks, elapsed);
    } else {
      std::printf("[FAIL] %s  (%lld checks, %.2fs): %s\n", entry.label, crit.checks, elapsed,
                  crit.detail.c_str());
      ++failed;
    }
  }
  if (failed == 0) std::printf("all %zu criteria passed\n", entries.size());
  else std::printf("%d of %zu criteria failed\n", failed, entries.size());
  return failed == 0 ? 0 : 1;
}

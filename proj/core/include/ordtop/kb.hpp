#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordtop/order.hpp"
#include "ordtop/pairing.hpp"

namespace ordtop {

using FinSeq = std::vector<Nat>;

bool is_prefix(const FinSeq& shorter, const FinSeq& longer);
FinSeq seq_restrict(const FinSeq& seq, Nat length);

/// Kleene-Brouwer comparison: extensions and left-shifts are smaller.
std::strong_ordering kb_compare(const FinSeq& a, const FinSeq& b);

struct DepthCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tree of finite sequences: decidable membership, an optional level-wise
/// entry bound g (every member has sigma(i) < g(i)), and an optional
/// explicit finite listing. An empty bound function means no bound is
/// supplied; operations that enumerate children require one.
struct TreePresentation {
  std::function<bool(const FinSeq&)> member;
  std::function<Nat(Nat)> bound;
  std::optional<std::vector<FinSeq>> finite_extent;
};

/// Tree with exactly the listed members (no prefix completion), bounded by
/// the listing's level-wise maxima.
TreePresentation tree_from_list(std::vector<FinSeq> nodes);

TreePresentation tree_from_oracle(std::function<bool(const FinSeq&)> member,
                                  std::function<Nat(Nat)> bound);

/// Named infinite test trees (all with bound 2):
///   zeros_with_noise        all-zero sequences plus every binary sequence
///                           of length <= 2
///   alternating_with_stubs  prefixes of 1,0,1,0,... plus every binary
///                           sequence of length <= 3
///   full_binary             every binary sequence
TreePresentation builtin_tree(const std::string& name);

struct TreeCheckReport {
  struct Violation {
    FinSeq node;
    std::string what;
  };
  std::vector<Violation> violations;
  Nat nodes_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Verifies prefix closure and bound compliance for all members up to the
/// given depth (all listed members, when a finite extent is present).
TreeCheckReport check_tree(const TreePresentation& tree, Nat depth);

/// Members of a bounded tree in length-lexicographic order, at most
/// max_count of them; stops early at the first wholly empty level.
std::vector<FinSeq> enumerate_members(const TreePresentation& tree, Nat max_count,
                                      Nat max_depth = 64);

/// Descends from eta along least children until a leaf: the KB-least
/// element of the subtree above eta when the descent terminates. nullopt
/// when the descent exceeds depth_cap. Requires eta in the tree and a bound.
std::optional<FinSeq> leftmost_leaf(const TreePresentation& tree, const FinSeq& eta,
                                    Nat depth_cap);

/// KB-immediate predecessor of sigma in the tree: the rightmost child when
/// sigma is not a leaf, otherwise the lowered-and-capped sibling with the
/// greatest branch point. nullopt means sigma is KB-least.
std::optional<FinSeq> kb_predecessor(const TreePresentation& tree, const FinSeq& sigma);

/// KB-immediate successor: the parent when no greater sibling enters the
/// tree, otherwise the KB-least element of the least greater sibling's
/// subtree (found as its leftmost leaf). nullopt means sigma is the empty
/// sequence, the KB-greatest element. Throws DepthCapExceeded when the leaf
/// search runs past depth_cap.
std::optional<FinSeq> kb_successor(const TreePresentation& tree, const FinSeq& sigma,
                                   Nat depth_cap);

/// The tree's KB order as an order presentation over length-lexicographic
/// sequence codes (mixed-radix with respect to the bound), together with
/// the coding maps.
struct KbView {
  TreePresentation tree;
  OrderPresentation order;
  std::function<Nat(const FinSeq&)> encode;
  std::function<std::optional<FinSeq>(Nat)> decode;
};

KbView kb_view(const TreePresentation& tree);

/// The discreteness witness d: each tree node's singleton as the basic open
/// (pred, succ) of the KB-ordered space, endpoints as coded extended points.
std::function<Interval(const FinSeq&)> kb_discrete_witness(const KbView& view, Nat depth_cap);

/// Membership oracle for the upper part A+ of a cut of the KB order.
struct UpperSetOracle {
  std::function<bool(const FinSeq&)> in_upper;
};

/// All members of the subtree above sigma, as an upper-set oracle for the
/// cut (empty, T_sigma) of that subtree's KB order.
UpperSetOracle subtree_upper_set(const TreePresentation& tree, const FinSeq& sigma);

/// Walks the leftmost-in-A+ chain: start, then repeatedly the extension by
/// the least m with sigma++m in A+. Returns steps+1 nested sequences, each
/// a tree member. Throws OracleViolation when no extension below the level
/// bound lies in A+ (then A+ has a KB-least element, against the premise)
/// or when the oracle strays outside the tree.
std::vector<FinSeq> extract_path(const TreePresentation& tree, const UpperSetOracle& upper,
                                 Nat steps, FinSeq start = {});

struct ReversalResult {
  enum class Kind { path, discrete, inconclusive };
  struct WitnessEntry {
    FinSeq node;
    std::optional<FinSeq> pred;  // nullopt: KB-least
    std::optional<FinSeq> succ;  // nullopt: KB-greatest
  };
  Kind kind = Kind::inconclusive;
  FinSeq pivot;                       // the subtree root the path came from
  std::vector<FinSeq> path;           // kind == path
  std::vector<WitnessEntry> witness;  // kind == discrete
  bool explored_all = false;          // the whole tree fit in the budget
  std::string note;
};

/// Searches the first budget members for a subtree whose leftmost descent
/// exceeds the budget (the staged surrogate for "no KB-least element") and
/// extracts a path from it; if every explored subtree has a KB-least
/// element, reports the KB order discrete on the explored region with the
/// predecessor/successor witness table.
ReversalResult reversal_pipeline(const TreePresentation& tree, Nat budget);

}  // namespace ordtop

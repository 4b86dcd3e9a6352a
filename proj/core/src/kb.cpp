#include "ordtop/kb.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace ordtop {
namespace {

std::string seq_text(const FinSeq& seq) {
  if (seq.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > (Nat{1} << 62) / a) throw std::overflow_error("sequence code overflow");
  return a * b;
}

void require_bound(const TreePresentation& tree, const char* who) {
  if (!tree.bound) throw std::invalid_argument(std::string(who) + ": bounded tree required");
}

void require_member(const TreePresentation& tree, const FinSeq& seq, const char* who) {
  if (!tree.member(seq)) throw std::invalid_argument(std::string(who) + ": not a tree member");
}

}  // namespace

bool is_prefix(const FinSeq& shorter, const FinSeq& longer) {
  if (shorter.size() > longer.size()) return false;
  return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

FinSeq seq_restrict(const FinSeq& seq, Nat length) {
  return FinSeq(seq.begin(), seq.begin() + std::min<std::size_t>(length, seq.size()));
}

std::strong_ordering kb_compare(const FinSeq& a, const FinSeq& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  // agreement on the common prefix: the proper extension is smaller
  return b.size() <=> a.size();
}

TreePresentation tree_from_list(std::vector<FinSeq> nodes) {
  auto node_set = std::make_shared<std::set<FinSeq>>(nodes.begin(), nodes.end());
  std::vector<Nat> level_bound;
  for (const FinSeq& node : nodes) {
    if (node.size() > level_bound.size()) level_bound.resize(node.size(), 0);
    for (std::size_t i = 0; i < node.size(); ++i) {
      level_bound[i] = std::max(level_bound[i], node[i] + 1);
    }
  }
  TreePresentation tree;
  tree.member = [node_set](const FinSeq& seq) { return node_set->count(seq) > 0; };
  tree.bound = [level_bound](Nat level) -> Nat {
    return level < level_bound.size() ? level_bound[level] : 0;
  };
  tree.finite_extent = std::move(nodes);
  return tree;
}

TreePresentation tree_from_oracle(std::function<bool(const FinSeq&)> member,
                                  std::function<Nat(Nat)> bound) {
  TreePresentation tree;
  tree.member = std::move(member);
  tree.bound = std::move(bound);
  return tree;
}

TreePresentation builtin_tree(const std::string& name) {
  const auto binary_bound = [](Nat) -> Nat { return 2; };
  if (name == "zeros_with_noise") {
    return tree_from_oracle(
        [](const FinSeq& seq) {
          const bool zeros = std::all_of(seq.begin(), seq.end(), [](Nat e) { return e == 0; });
          const bool noise =
              seq.size() <= 2 && std::all_of(seq.begin(), seq.end(), [](Nat e) { return e < 2; });
          return zeros || noise;
        },
        binary_bound);
  }
  if (name == "alternating_with_stubs") {
    return tree_from_oracle(
        [](const FinSeq& seq) {
          bool on_path = true;
          for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != (i % 2 == 0 ? 1u : 0u)) on_path = false;
          }
          const bool stub =
              seq.size() <= 3 && std::all_of(seq.begin(), seq.end(), [](Nat e) { return e < 2; });
          return on_path || stub;
        },
        binary_bound);
  }
  if (name == "full_binary") {
    return tree_from_oracle(
        [](const FinSeq& seq) {
          return std::all_of(seq.begin(), seq.end(), [](Nat e) { return e < 2; });
        },
        binary_bound);
  }
  throw std::invalid_argument("builtin_tree: unknown tree: " + name);
}

TreeCheckReport check_tree(const TreePresentation& tree, Nat depth) {
  TreeCheckReport report;
  const auto check_node = [&](const FinSeq& node) {
    ++report.nodes_checked;
    if (tree.bound) {
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (node[i] >= tree.bound(i)) {
          report.violations.push_back({node, "entry exceeds the bound at level " + std::to_string(i)});
          break;
        }
      }
    }
    if (!node.empty() && !tree.member(seq_restrict(node, node.size() - 1))) {
      report.violations.push_back({node, "parent missing: tree not closed under initial segments"});
    }
  };

  if (tree.finite_extent) {
    for (const FinSeq& node : *tree.finite_extent) check_node(node);
    return report;
  }

  require_bound(tree, "check_tree");
  std::vector<FinSeq> level{FinSeq{}};
  if (tree.member(FinSeq{})) check_node(FinSeq{});
  for (Nat d = 0; d < depth; ++d) {
    std::vector<FinSeq> next;
    for (const FinSeq& stem : level) {
      for (Nat m = 0; m < tree.bound(d); ++m) {
        FinSeq child = stem;
        child.push_back(m);
        if (tree.member(child)) check_node(child);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  return report;
}

std::vector<FinSeq> enumerate_members(const TreePresentation& tree, Nat max_count,
                                      Nat max_depth) {
  std::vector<FinSeq> members;
  if (tree.finite_extent) {
    members = *tree.finite_extent;
    std::sort(members.begin(), members.end(), [](const FinSeq& a, const FinSeq& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    if (members.size() > max_count) members.resize(max_count);
    return members;
  }
  require_bound(tree, "enumerate_members");
  std::vector<FinSeq> level;
  if (tree.member(FinSeq{})) level.push_back(FinSeq{});
  for (Nat d = 0; !level.empty() && members.size() < max_count && d <= max_depth; ++d) {
    for (const FinSeq& node : level) {
      members.push_back(node);
      if (members.size() >= max_count) return members;
    }
    std::vector<FinSeq> next;
    for (const FinSeq& stem : level) {
      for (Nat m = 0; m < tree.bound(d); ++m) {
        FinSeq child = stem;
        child.push_back(m);
        if (tree.member(child)) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return members;
}

std::optional<FinSeq> leftmost_leaf(const TreePresentation& tree, const FinSeq& eta,
                                    Nat depth_cap) {
  require_bound(tree, "leftmost_leaf");
  require_member(tree, eta, "leftmost_leaf");
  FinSeq cursor = eta;
  for (Nat step = 0; step <= depth_cap; ++step) {
    std::optional<Nat> least_child;
    for (Nat m = 0; m < tree.bound(cursor.size()); ++m) {
      FinSeq child = cursor;
      child.push_back(m);
      if (tree.member(child)) {
        least_child = m;
        break;
      }
    }
    if (!least_child) return cursor;  // a leaf
    if (step == depth_cap) break;     // would descend past the cap
    cursor.push_back(*least_child);
  }
  return std::nullopt;
}

std::optional<FinSeq> kb_predecessor(const TreePresentation& tree, const FinSeq& sigma) {
  require_bound(tree, "kb_predecessor");
  require_member(tree, sigma, "kb_predecessor");

  std::optional<Nat> rightmost;
  for (Nat m = 0; m < tree.bound(sigma.size()); ++m) {
    FinSeq child = sigma;
    child.push_back(m);
    if (tree.member(child)) rightmost = m;
  }
  if (rightmost) {
    FinSeq child = sigma;
    child.push_back(*rightmost);
    return child;
  }

  // sigma is a leaf: lower the entry at the greatest possible branch point.
  for (Nat i = sigma.size(); i-- > 0;) {
    for (Nat m = sigma[i]; m-- > 0;) {
      FinSeq candidate = seq_restrict(sigma, i);
      candidate.push_back(m);
      if (tree.member(candidate)) return candidate;
    }
  }
  return std::nullopt;  // KB-least
}

std::optional<FinSeq> kb_successor(const TreePresentation& tree, const FinSeq& sigma,
                                   Nat depth_cap) {
  require_bound(tree, "kb_successor");
  require_member(tree, sigma, "kb_successor");
  if (sigma.empty()) return std::nullopt;  // KB-greatest

  const Nat level = sigma.size() - 1;
  for (Nat m = sigma[level] + 1; m < tree.bound(level); ++m) {
    FinSeq sibling = seq_restrict(sigma, level);
    sibling.push_back(m);
    if (!tree.member(sibling)) continue;
    const std::optional<FinSeq> leaf = leftmost_leaf(tree, sibling, depth_cap);
    if (!leaf)
      throw DepthCapExceeded("kb_successor: leftmost descent past the cap at " +
                             seq_text(sibling));
    return leaf;
  }
  return seq_restrict(sigma, level);  // the parent
}

KbView kb_view(const TreePresentation& tree) {
  require_bound(tree, "kb_view");
  const auto bound = tree.bound;

  // Length-lexicographic mixed-radix coding: codes below offset(l+1) and at
  // least offset(l) are the level-l sequences in lexicographic order, where
  // offset(l) counts the bounded sequences of length < l.
  auto encode = [bound](const FinSeq& seq) -> Nat {
    Nat offset = 0, level_size = 1;
    for (std::size_t l = 0; l < seq.size(); ++l) {
      offset += level_size;
      level_size = checked_mul(level_size, bound(l));
    }
    Nat rank = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] >= bound(i)) throw std::invalid_argument("kb_view: entry exceeds the bound");
      rank = checked_mul(rank, bound(i)) + seq[i];
    }
    return offset + rank;
  };
  auto decode = [bound](Nat code) -> std::optional<FinSeq> {
    Nat offset = 0, level_size = 1;
    Nat length = 0;
    while (code >= offset + level_size) {
      offset += level_size;
      level_size = checked_mul(level_size, bound(length));
      ++length;
      if (level_size == 0) return std::nullopt;  // codes past the last level
    }
    Nat rank = code - offset;
    FinSeq seq(length, 0);
    for (Nat i = length; i-- > 0;) {
      const Nat radix = bound(i);
      seq[i] = rank % radix;
      rank /= radix;
    }
    return seq;
  };

  KbView view;
  view.tree = tree;
  view.encode = encode;
  view.decode = decode;

  OrderPresentation ord;
  ord.carrier = [tree, encode](Nat j) -> std::optional<Nat> {
    const std::vector<FinSeq> members = enumerate_members(tree, j + 1);
    if (j >= members.size()) return std::nullopt;
    return encode(members[j]);
  };
  ord.contains = [tree, decode](Nat code) {
    const std::optional<FinSeq> seq = decode(code);
    return seq && tree.member(*seq);
  };
  ord.less = [decode](Nat a, Nat b) {
    const std::optional<FinSeq> sa = decode(a);
    const std::optional<FinSeq> sb = decode(b);
    if (!sa || !sb) throw std::invalid_argument("kb order: code outside the carrier");
    return kb_compare(*sa, *sb) == std::strong_ordering::less;
  };
  if (tree.finite_extent) ord.size = tree.finite_extent->size();
  view.order = std::move(ord);
  return view;
}

std::function<Interval(const FinSeq&)> kb_discrete_witness(const KbView& view, Nat depth_cap) {
  return [view, depth_cap](const FinSeq& sigma) -> Interval {
    const std::optional<FinSeq> pred = kb_predecessor(view.tree, sigma);
    const std::optional<FinSeq> succ = kb_successor(view.tree, sigma, depth_cap);
    const ExtPoint lo = pred ? ExtPoint::point(view.encode(*pred)) : ExtPoint::neg_inf();
    const ExtPoint hi = succ ? ExtPoint::point(view.encode(*succ)) : ExtPoint::pos_inf();
    return Interval{lo, hi};
  };
}

UpperSetOracle subtree_upper_set(const TreePresentation& tree, const FinSeq& sigma) {
  require_member(tree, sigma, "subtree_upper_set");
  UpperSetOracle oracle;
  oracle.in_upper = [tree, sigma](const FinSeq& tau) {
    return is_prefix(sigma, tau) && tree.member(tau);
  };
  return oracle;
}

std::vector<FinSeq> extract_path(const TreePresentation& tree, const UpperSetOracle& upper,
                                 Nat steps, FinSeq start) {
  require_bound(tree, "extract_path");
  require_member(tree, start, "extract_path");
  if (!upper.in_upper(start))
    throw OracleViolation("extract_path: start not in the upper part: " + seq_text(start));

  std::vector<FinSeq> chain{start};
  FinSeq cursor = std::move(start);
  for (Nat step = 0; step < steps; ++step) {
    std::optional<Nat> least;
    for (Nat m = 0; m < tree.bound(cursor.size()); ++m) {
      FinSeq child = cursor;
      child.push_back(m);
      if (upper.in_upper(child)) {
        least = m;
        break;
      }
    }
    if (!least)
      throw OracleViolation("extract_path: oracle violates the no-least-element premise at " +
                            seq_text(cursor));
    cursor.push_back(*least);
    if (!tree.member(cursor))
      throw OracleViolation("extract_path: oracle strays outside the tree at " +
                            seq_text(cursor));
    chain.push_back(cursor);
  }
  return chain;
}

ReversalResult reversal_pipeline(const TreePresentation& tree, Nat budget) {
  ReversalResult result;
  require_bound(tree, "reversal_pipeline");

  std::vector<FinSeq> members = enumerate_members(tree, budget + 1);
  result.explored_all = members.size() <= budget;
  if (members.size() > budget) members.resize(budget);
  if (members.empty()) {
    result.note = "no members within the budget";
    return result;
  }

  for (const FinSeq& sigma : members) {
    if (leftmost_leaf(tree, sigma, budget)) continue;  // subtree has a KB-least element
    result.pivot = sigma;
    try {
      result.path = extract_path(tree, subtree_upper_set(tree, sigma), budget, sigma);
      result.kind = ReversalResult::Kind::path;
    } catch (const OracleViolation& violation) {
      result.kind = ReversalResult::Kind::inconclusive;
      result.note = violation.what();
    }
    return result;
  }

  try {
    for (const FinSeq& sigma : members) {
      result.witness.push_back(
          {sigma, kb_predecessor(tree, sigma), kb_successor(tree, sigma, budget)});
    }
  } catch (const DepthCapExceeded& cap) {
    result.kind = ReversalResult::Kind::inconclusive;
    result.note = cap.what();
    return result;
  }
  result.kind = ReversalResult::Kind::discrete;
  result.note = result.explored_all ? "kb order discrete" : "kb order discrete on explored region";
  return result;
}

}  // namespace ordtop

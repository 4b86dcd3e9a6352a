// ordtop: order topologies of countable linear orders at the command line.
//
// Reports are deterministic, line-oriented text on stdout; budgets are
// echoed so staged results can be reproduced. Exit status: 0 for ok/found,
// 1 for none/staged, 2 for errors.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordtop/csc.hpp"
#include "ordtop/gallery.hpp"
#include "ordtop/injection.hpp"
#include "ordtop/io.hpp"
#include "ordtop/kb.hpp"
#include "ordtop/topology.hpp"

using namespace ordtop;

namespace {

constexpr Nat kDefaultBudget = 64;

std::string join(const std::vector<Nat>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

int run_check_cover(const std::string& order_arg, const std::string& cover_arg) {
  const OrderedSpace os = ordered_space(resolve_order_arg(order_arg));
  std::ifstream file(cover_arg);
  if (!file) throw std::invalid_argument("cannot open file: " + cover_arg);
  const std::vector<Interval> cover = parse_cover(file);
  std::printf("order: %s\ncover: %s\n", order_arg.c_str(), cover_arg.c_str());
  const std::optional<Nat> witness = uncovered_witness(os, cover);
  if (!witness) {
    std::printf("covers: yes\nstatus: ok\n");
    return 0;
  }
  std::printf("covers: no\nuncovered: %llu\nstatus: none\n",
              static_cast<unsigned long long>(*witness));
  return 1;
}

int run_subcover(const std::string& order_arg, const std::string& cover_arg, Nat scan) {
  const OrderedSpace os = ordered_space(resolve_order_arg(order_arg));
  const CoverStream cover = resolve_cover_arg(cover_arg);
  std::printf("order: %s\ncover: %s\nscan: %llu\n", order_arg.c_str(), cover_arg.c_str(),
              static_cast<unsigned long long>(scan));
  const auto found = find_finite_subcover(os, cover, scan);
  if (found) {
    std::printf("found: %s\nstatus: found\n", join(*found).c_str());
    return 0;
  }
  std::printf("none\nstatus: none\n");
  return 1;
}

int run_gap_find(const std::string& order_arg, const std::string& cover_arg, Nat budget) {
  const OrderPresentation ord = resolve_order_arg(order_arg);
  const LinkageTreeParams params = make_linkage_params(ord, resolve_cover_arg(cover_arg));
  std::printf("order: %s\ncover: %s\nbudget: %llu\n", order_arg.c_str(), cover_arg.c_str(),
              static_cast<unsigned long long>(budget));
  const DichotomyResult result = gap_finder(params, budget);
  if (result.kind == DichotomyResult::Kind::subcover) {
    std::printf("subcover: %s\nstatus: found\n", join(result.subcover).c_str());
    return 0;
  }
  std::printf("staged cut (stage %llu)\nlower: %s\nupper: %s\nstatus: staged\n",
              static_cast<unsigned long long>(result.stage), join(result.lower).c_str(),
              join(result.upper).c_str());
  return 1;
}

int run_kb_sort(const std::string& tree_arg, Nat budget, Nat depth) {
  const TreePresentation tree = resolve_tree_arg(tree_arg);
  std::printf("tree: %s\nbudget: %llu\ndepth: %llu\n", tree_arg.c_str(),
              static_cast<unsigned long long>(budget), static_cast<unsigned long long>(depth));
  std::vector<FinSeq> members = enumerate_members(tree, budget, depth);
  std::sort(members.begin(), members.end(), [](const FinSeq& a, const FinSeq& b) {
    return kb_compare(a, b) == std::strong_ordering::less;
  });
  std::printf("kb order:\n");
  for (const FinSeq& node : members) std::printf("%s\n", format_seq(node).c_str());
  std::printf("status: ok\n");
  return 0;
}

int run_kb_neighbors(const std::string& tree_arg, const std::string& sigma_text, Nat budget) {
  const TreePresentation tree = resolve_tree_arg(tree_arg);
  const FinSeq sigma = parse_sigma(sigma_text);
  std::printf("tree: %s\nsigma: %s\n", tree_arg.c_str(), format_seq(sigma).c_str());
  const auto pred = kb_predecessor(tree, sigma);
  const auto succ = kb_successor(tree, sigma, budget);
  std::printf("pred: %s\n", pred ? format_seq(*pred).c_str() : "-inf");
  std::printf("succ: %s\n", succ ? format_seq(*succ).c_str() : "+inf");
  std::printf("status: ok\n");
  return 0;
}

int run_extract_path(const std::string& tree_arg, const std::string& sigma_text, Nat budget) {
  const TreePresentation tree = resolve_tree_arg(tree_arg);
  const FinSeq start = parse_sigma(sigma_text);
  std::printf("tree: %s\nsigma: %s\nbudget: %llu\n", tree_arg.c_str(),
              format_seq(start).c_str(), static_cast<unsigned long long>(budget));
  const std::vector<FinSeq> chain =
      extract_path(tree, subtree_upper_set(tree, start), budget, start);
  std::printf("path:\n");
  for (const FinSeq& node : chain) std::printf("%s\n", format_seq(node).c_str());
  std::printf("status: ok\n");
  return 0;
}

int run_injection_demo(const std::string& cover_arg, Nat sample, Nat budget) {
  const std::function<Nat(Nat)> doubling = [](Nat s) { return 2 * s; };
  const CscSpace space = injection_space(doubling);
  std::printf("injection: doubling\nsample: %llu\nbudget: %llu\n",
              static_cast<unsigned long long>(sample), static_cast<unsigned long long>(budget));

  const BaseAxiomReport report = check_base_axioms(space, 8, 12);
  std::printf("base axioms: %s (8 points x 12 indices)\n", report.ok() ? "ok" : "violated");

  std::function<Nat(Nat)> cover;
  if (cover_arg.empty()) {
    cover = [](Nat m) -> Nat {
      const Nat t = m / 2;
      if (m % 2 == 0) return injection_index_encode({1, 2 * t, t});
      return injection_index_encode({0, 2 * t + 1, 0});
    };
  } else {
    std::ifstream file(cover_arg);
    if (!file) throw std::invalid_argument("cannot open file: " + cover_arg);
    const std::vector<Nat> indices = parse_injection_indices(file);
    cover = [indices](Nat m) -> Nat {
      if (m >= indices.size()) throw std::out_of_range("cover stream index out of range");
      return indices[m];
    };
  }
  for (Nat n = 0; n < sample; ++n) {
    const RangeDecodeResult decoded = range_decode(doubling, cover, n, budget);
    switch (decoded.status) {
      case RangeStatus::in_range:
        std::printf("n=%llu: in_range s=%llu\n", static_cast<unsigned long long>(n),
                    static_cast<unsigned long long>(decoded.witness));
        break;
      case RangeStatus::not_in_range:
        std::printf("n=%llu: not_in_range\n", static_cast<unsigned long long>(n));
        break;
      case RangeStatus::unknown:
        std::printf("n=%llu: unknown\n", static_cast<unsigned long long>(n));
        break;
    }
  }
  std::printf("status: %s\n", report.ok() ? "ok" : "none");
  return report.ok() ? 0 : 1;
}

int run_flatten(const std::string& table_arg, Nat scan, Nat budget) {
  std::ifstream file(table_arg);
  if (!file) throw std::invalid_argument("cannot open file: " + table_arg);
  const HonestSequence h2 = parse_honest_table(file);
  std::printf("table: %s\nscan: %llu\nbudget: %llu\n", table_arg.c_str(),
              static_cast<unsigned long long>(scan), static_cast<unsigned long long>(budget));
  const FlattenedCover flat = honest_flatten(h2, budget);
  std::printf("fallback: %llu from (%llu,%llu)\n",
              static_cast<unsigned long long>(flat.fallback_index),
              static_cast<unsigned long long>(flat.fallback_cell.first),
              static_cast<unsigned long long>(flat.fallback_cell.second));
  for (Nat p = 0; p < scan; ++p) {
    const auto [m, n] = flat.origin(p);
    std::printf("g(%llu) = %llu from (%llu,%llu)\n", static_cast<unsigned long long>(p),
                static_cast<unsigned long long>(flat.g(p)), static_cast<unsigned long long>(m),
                static_cast<unsigned long long>(n));
  }
  std::printf("stage bound: %llu\n",
              static_cast<unsigned long long>(subcover_stage_bound(scan, flat)));
  std::printf("status: ok\n");
  return 0;
}

int run_verify_base(const std::string& order_arg, Nat sample, Nat scan) {
  const OrderedSpace os = ordered_space(resolve_order_arg(order_arg));
  std::printf("order: %s\npoints: %llu\nindices: %llu\n", order_arg.c_str(),
              static_cast<unsigned long long>(sample), static_cast<unsigned long long>(scan));
  const BaseAxiomReport report = check_base_axioms(os.space, sample, scan);
  for (const auto& violation : report.violations) {
    std::printf("violation: x=%llu i=%llu j=%llu %s\n",
                static_cast<unsigned long long>(violation.x),
                static_cast<unsigned long long>(violation.i),
                static_cast<unsigned long long>(violation.j), violation.what.c_str());
  }
  std::printf("violations: %zu\nstatus: %s\n", report.violations.size(),
              report.ok() ? "ok" : "none");
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective order topologies: covers, linkages, and Kleene-Brouwer orders"};
  app.require_subcommand(1);

  std::string order_arg, cover_arg, tree_arg, sigma_text;
  Nat budget = kDefaultBudget, scan = kDefaultBudget, depth = 6, sample = 20;

  const auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order_arg, "order file or gallery:NAME")->required();
  };
  const auto add_cover = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--cover", cover_arg, "cover file or gallery-gap:NAME");
    if (required) opt->required();
  };
  const auto add_tree = [&](CLI::App* cmd) {
    cmd->add_option("--tree", tree_arg, "tree file or builtin:NAME")->required();
  };

  CLI::App* check_cover = app.add_subcommand("check-cover", "does a finite interval set cover?");
  add_order(check_cover);
  add_cover(check_cover, true);

  CLI::App* subcover = app.add_subcommand("subcover", "linkage search for a finite subcover");
  add_order(subcover);
  add_cover(subcover, true);
  subcover->add_option("--scan", scan, "cover indices to scan");

  CLI::App* gap_find = app.add_subcommand("gap-find", "finite subcover or staged cut");
  add_order(gap_find);
  add_cover(gap_find, true);
  gap_find->add_option("--budget", budget, "member sample bound (indices: 2x)");

  CLI::App* kb_sort = app.add_subcommand("kb-sort", "list tree nodes in Kleene-Brouwer order");
  add_tree(kb_sort);
  kb_sort->add_option("--budget", budget, "node cap");
  kb_sort->add_option("--depth", depth, "depth cap");

  CLI::App* kb_neighbors =
      app.add_subcommand("kb-neighbors", "immediate predecessor and successor");
  add_tree(kb_neighbors);
  kb_neighbors->add_option("--sigma", sigma_text, "node as CSV entries, - for empty")->required();
  kb_neighbors->add_option("--budget", budget, "leftmost-descent cap");

  CLI::App* extract = app.add_subcommand("extract-path", "leftmost-in-upper path prefixes");
  add_tree(extract);
  extract->add_option("--sigma", sigma_text, "subtree root (default: the empty sequence)");
  extract->add_option("--budget", budget, "number of extension steps");

  CLI::App* injection = app.add_subcommand("injection-demo", "range decoding from a cover");
  add_cover(injection, false);
  injection->add_option("--sample", sample, "decode n below this bound");
  injection->add_option("--budget", budget, "cover positions to scan");

  CLI::App* flatten = app.add_subcommand("flatten", "flatten an honest table to one stream");
  flatten->add_option("--cover", cover_arg, "honest table file (m n i1 i2 ...)")->required();
  flatten->add_option("--scan", scan, "flattened positions to print");
  flatten->add_option("--budget", budget, "fallback search bound");

  CLI::App* verify = app.add_subcommand("verify-base", "check the strong-base axioms");
  add_order(verify);
  verify->add_option("--sample", sample, "points to sample");
  verify->add_option("--scan", scan, "indices to sample");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_cover->parsed()) return run_check_cover(order_arg, cover_arg);
    if (subcover->parsed()) return run_subcover(order_arg, cover_arg, scan);
    if (gap_find->parsed()) return run_gap_find(order_arg, cover_arg, budget);
    if (kb_sort->parsed()) return run_kb_sort(tree_arg, budget, depth);
    if (kb_neighbors->parsed()) return run_kb_neighbors(tree_arg, sigma_text, budget);
    if (extract->parsed()) return run_extract_path(tree_arg, sigma_text, budget);
    if (injection->parsed()) return run_injection_demo(cover_arg, sample, budget);
    if (flatten->parsed()) return run_flatten(cover_arg, scan, budget);
    if (verify->parsed()) return run_verify_base(order_arg, sample, scan);
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return 2;
  }
  return 2;
}

#include "ordtop/io.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ordtop/gallery.hpp"
#include "ordtop/injection.hpp"

namespace ordtop {
namespace {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

Nat parse_nat(const std::string& token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(what) + ": expected a natural, got '" + token + "'");
  return std::stoull(token);
}

std::ifstream open_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open file: " + path);
  return file;
}

}  // namespace

OrderPresentation parse_order(std::istream& in) {
  const std::vector<std::string> lines = content_lines(in);
  if (lines.empty()) throw std::invalid_argument("order: empty input");
  const std::vector<std::string> header = tokens_of(lines[0]);
  if (header.size() == 2 && header[0] == "gallery") return gallery(header[1]);
  if (header.size() == 2 && header[0] == "finite") {
    const Nat n = parse_nat(header[1], "order");
    std::vector<Nat> labels;
    for (std::size_t t = 1; t < lines.size(); ++t) {
      for (const std::string& token : tokens_of(lines[t])) {
        labels.push_back(parse_nat(token, "order label"));
      }
    }
    if (labels.size() != n)
      throw std::invalid_argument("order: header says " + std::to_string(n) + " labels, got " +
                                  std::to_string(labels.size()));
    return order_from_labels(std::move(labels));
  }
  throw std::invalid_argument("order: expected `finite n` or `gallery <name>` header");
}

std::vector<Interval> parse_cover(std::istream& in) {
  std::vector<Interval> cover;
  for (const std::string& line : content_lines(in)) {
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.size() != 2)
      throw std::invalid_argument("cover: expected two endpoint tokens per line: " + line);
    cover.push_back(Interval{parse_ext_token(tokens[0]), parse_ext_token(tokens[1])});
  }
  return cover;
}

GapCertificate parse_cut(std::istream& in, const OrderPresentation& ord) {
  const std::vector<std::string> lines = content_lines(in);
  if (!lines.empty()) {
    const std::vector<std::string> header = tokens_of(lines[0]);
    if (header.size() == 2 && header[0] == "gallery-gap") {
      const OrderPresentation named = gallery(header[1]);
      if (!named.gap)
        throw std::invalid_argument("cut: gallery order has no gap certificate: " + header[1]);
      return *named.gap;
    }
  }
  auto lower = std::make_shared<std::set<Nat>>();
  auto upper = std::make_shared<std::set<Nat>>();
  for (const std::string& line : lines) {
    std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) continue;
    std::set<Nat>* side = nullptr;
    if (tokens[0] == "lower:") side = lower.get();
    else if (tokens[0] == "upper:") side = upper.get();
    else throw std::invalid_argument("cut: expected `lower:` or `upper:` line: " + line);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      side->insert(parse_nat(tokens[t], "cut label"));
    }
  }
  GapCertificate cert;
  cert.cut.lower = [lower](Nat x) { return lower->count(x) > 0; };
  cert.cut.upper = [upper](Nat x) { return upper->count(x) > 0; };
  // Explicit finite cuts cannot certify a gap; the witnesses walk within
  // the listed side and fail at its extremes.
  cert.no_max_witness = [lower, ord](Nat a) -> Nat {
    for (Nat b : *lower) {
      if (ord.less(a, b)) return b;
    }
    throw std::invalid_argument("no_max_witness: no larger member listed in the lower part");
  };
  cert.no_min_witness = [upper, ord](Nat b) -> Nat {
    for (Nat a : *upper) {
      if (ord.less(a, b)) return a;
    }
    throw std::invalid_argument("no_min_witness: no smaller member listed in the upper part");
  };
  return cert;
}

TreePresentation parse_tree(std::istream& in) {
  const std::vector<std::string> lines = content_lines(in);
  if (!lines.empty()) {
    const std::vector<std::string> header = tokens_of(lines[0]);
    if (header.size() == 2 && header[0] == "builtin") return builtin_tree(header[1]);
  }
  std::vector<Nat> bound_values;
  std::vector<FinSeq> nodes;
  for (std::size_t t = 0; t < lines.size(); ++t) {
    const std::vector<std::string> tokens = tokens_of(lines[t]);
    if (t == 0 && !tokens.empty() && tokens[0] == "bound:") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        bound_values.push_back(parse_nat(tokens[i], "tree bound"));
      }
      continue;
    }
    if (tokens.size() != 1)
      throw std::invalid_argument("tree: expected one node per line: " + lines[t]);
    nodes.push_back(parse_sigma(tokens[0]));
  }
  TreePresentation tree = tree_from_list(std::move(nodes));
  if (!bound_values.empty()) {
    tree.bound = [bound_values](Nat level) -> Nat {
      return level < bound_values.size() ? bound_values[level] : bound_values.back();
    };
  }
  return tree;
}

HonestSequence parse_honest_table(std::istream& in) {
  auto table = std::make_shared<std::map<std::pair<Nat, Nat>, std::vector<Nat>>>();
  for (const std::string& line : content_lines(in)) {
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.size() < 2)
      throw std::invalid_argument("honest table: expected `m n i1 i2 ...`: " + line);
    const Nat m = parse_nat(tokens[0], "honest table");
    const Nat n = parse_nat(tokens[1], "honest table");
    std::vector<Nat> cell;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      cell.push_back(parse_nat(tokens[t], "honest table index"));
    }
    (*table)[{m, n}] = std::move(cell);
  }
  return [table](Nat m, Nat n) -> std::vector<Nat> {
    const auto it = table->find({m, n});
    return it == table->end() ? std::vector<Nat>{} : it->second;
  };
}

std::vector<Nat> parse_injection_indices(std::istream& in) {
  std::vector<Nat> indices;
  for (const std::string& line : content_lines(in)) {
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) continue;
    const Nat tag = parse_nat(tokens[0], "injection index tag");
    if (tag == 1 && tokens.size() == 3) {
      indices.push_back(injection_index_encode(
          {1, parse_nat(tokens[1], "injection index"), parse_nat(tokens[2], "injection index")}));
    } else if ((tag == 0 || tag == 2) && tokens.size() == 2) {
      indices.push_back(injection_index_encode({tag, parse_nat(tokens[1], "injection index"), 0}));
    } else {
      throw std::invalid_argument("injection index: expected `0 n`, `1 n s`, or `2 s`: " + line);
    }
  }
  return indices;
}

OrderPresentation resolve_order_arg(const std::string& arg) {
  if (arg.rfind("gallery:", 0) == 0) return gallery(arg.substr(8));
  std::ifstream file = open_file(arg);
  return parse_order(file);
}

CoverStream resolve_cover_arg(const std::string& arg) {
  if (arg.rfind("gallery-gap:", 0) == 0) {
    const OrderPresentation ord = gallery(arg.substr(12));
    if (!ord.gap)
      throw std::invalid_argument("cover: gallery order has no gap certificate: " + arg);
    return cover_from_gap(ord, *ord.gap);
  }
  std::ifstream file = open_file(arg);
  return cover_from_intervals(parse_cover(file));
}

TreePresentation resolve_tree_arg(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) return builtin_tree(arg.substr(8));
  std::ifstream file = open_file(arg);
  return parse_tree(file);
}

std::string format_ext(const ExtPoint& p) {
  switch (p.kind()) {
    case ExtPoint::Kind::neg_inf: return "-inf";
    case ExtPoint::Kind::pos_inf: return "+inf";
    case ExtPoint::Kind::point: return std::to_string(p.value());
  }
  return "-inf";
}

ExtPoint parse_ext_token(const std::string& token) {
  if (token == "-inf") return ExtPoint::neg_inf();
  if (token == "+inf") return ExtPoint::pos_inf();
  return ExtPoint::point(parse_nat(token, "endpoint"));
}

std::string format_interval(const Interval& iv) {
  return format_ext(iv.lo) + " " + format_ext(iv.hi);
}

std::string format_seq(const FinSeq& seq) {
  if (seq.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

FinSeq parse_sigma(const std::string& text) {
  if (text == "-") return {};
  FinSeq seq;
  std::string entry;
  std::istringstream stream(text);
  while (std::getline(stream, entry, ',')) {
    seq.push_back(parse_nat(entry, "sequence entry"));
  }
  return seq;
}

}  // namespace ordtop

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordtop/csc.hpp"
#include "ordtop/kb.hpp"
#include "ordtop/order.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

/// Text formats, all UTF-8 and line-oriented. Blank lines and lines starting
/// with '#' are ignored.
///
/// Order:    header `finite n` followed by n labels in order, or
///           `gallery <name>`.
/// Cover:    one interval per line, two extended-point tokens `a b` where a
///           token is a natural, `-inf`, or `+inf`.
/// Cut:      `lower: <labels>` and `upper: <labels>`, or `gallery-gap <name>`.
/// Tree:     optional header `bound: g0 g1 ...` (the last value repeats),
///           then one node per line as comma-separated entries, `-` for the
///           empty sequence; or `builtin <name>`.
/// Honest:   one cell per line, `m n i1 i2 ...` listing the index set of
///           cell (m, n); unlisted cells are empty.

OrderPresentation parse_order(std::istream& in);
std::vector<Interval> parse_cover(std::istream& in);
GapCertificate parse_cut(std::istream& in, const OrderPresentation& ord);
TreePresentation parse_tree(std::istream& in);
HonestSequence parse_honest_table(std::istream& in);

/// Injection-space index stream: one index per line, `0 n`, `1 n s`, or
/// `2 s`, in the coding of injection.hpp.
std::vector<Nat> parse_injection_indices(std::istream& in);

/// CLI argument resolution: `gallery:<name>`, `gallery-gap:<name>`, and
/// `builtin:<name>` address built-in objects, anything else is a file path.
OrderPresentation resolve_order_arg(const std::string& arg);
CoverStream resolve_cover_arg(const std::string& arg);
TreePresentation resolve_tree_arg(const std::string& arg);

std::string format_ext(const ExtPoint& p);
ExtPoint parse_ext_token(const std::string& token);

std::string format_interval(const Interval& iv);

/// Comma-separated entries, `-` for the empty sequence.
std::string format_seq(const FinSeq& seq);
FinSeq parse_sigma(const std::string& text);

}  // namespace ordtop

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "ordtop/injection.hpp"
#include "ordtop/io.hpp"

using namespace ordtop;

TEST_CASE("order files: finite header with labels in order") {
  std::istringstream in("# a comment\nfinite 3\n2 0 1\n");
  const OrderPresentation ord = parse_order(in);
  CHECK(ord.size == 3);
  CHECK(ord.less(2, 0));
  CHECK(ord.less(0, 1));
  CHECK_FALSE(ord.less(1, 2));

  std::istringstream bad("finite 3\n0 1\n");
  CHECK_THROWS_AS(parse_order(bad), std::invalid_argument);
  std::istringstream unknown("mystery 3\n");
  CHECK_THROWS_AS(parse_order(unknown), std::invalid_argument);
}

TEST_CASE("order files: gallery header") {
  std::istringstream in("gallery omega_plus_omega_star\n");
  const OrderPresentation ord = parse_order(in);
  CHECK(ord.gap.has_value());
}

TEST_CASE("cover files round-trip through the formatter") {
  std::istringstream in("-inf 2\n1 3\n2 +inf\n");
  const std::vector<Interval> cover = parse_cover(in);
  REQUIRE(cover.size() == 3);
  CHECK(cover[0].lo == ExtPoint::neg_inf());
  CHECK(cover[2].hi == ExtPoint::pos_inf());
  std::string text;
  for (const Interval& iv : cover) text += format_interval(iv) + "\n";
  std::istringstream again(text);
  const std::vector<Interval> reparsed = parse_cover(again);
  REQUIRE(reparsed.size() == cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    CHECK(reparsed[i].lo == cover[i].lo);
    CHECK(reparsed[i].hi == cover[i].hi);
  }

  std::istringstream bad("1 2 3\n");
  CHECK_THROWS_AS(parse_cover(bad), std::invalid_argument);
}

TEST_CASE("cut files: explicit parts and gallery gaps") {
  const OrderPresentation ord = resolve_order_arg("gallery:finite(4)");
  std::istringstream in("lower: 0 1\nupper: 2 3\n");
  const GapCertificate cert = parse_cut(in, ord);
  CHECK(cert.cut.lower(1));
  CHECK(cert.cut.upper(2));
  CHECK_FALSE(cert.cut.lower(3));

  std::istringstream named("gallery-gap omega_plus_omega_star\n");
  const GapCertificate parity = parse_cut(named, ord);
  CHECK(parity.cut.lower(4));
  CHECK(parity.cut.upper(3));
}

TEST_CASE("tree files: bound header and csv nodes") {
  std::istringstream in("bound: 2\n-\n0\n1\n");
  const TreePresentation tree = parse_tree(in);
  CHECK(tree.member({}));
  CHECK(tree.member({1}));
  CHECK_FALSE(tree.member({1, 0}));
  CHECK(tree.bound(0) == 2);
  CHECK(tree.bound(9) == 2);  // the last bound value repeats

  std::istringstream builtin_line("builtin full_binary\n");
  CHECK(parse_tree(builtin_line).member({1, 1, 1}));
}

TEST_CASE("sequence text round-trips, with - for the empty sequence") {
  CHECK(format_seq({}) == "-");
  CHECK(parse_sigma("-").empty());
  for (const FinSeq& seq : {FinSeq{}, FinSeq{1}, FinSeq{1, 0, 2}, FinSeq{10, 0}}) {
    CHECK(parse_sigma(format_seq(seq)) == seq);
  }
  CHECK_THROWS_AS(parse_sigma("1,x"), std::invalid_argument);
}

TEST_CASE("honest tables: listed cells only") {
  std::istringstream in("0 0 5 9\n2 1 7\n");
  const HonestSequence h2 = parse_honest_table(in);
  CHECK(h2(0, 0) == std::vector<Nat>{5, 9});
  CHECK(h2(2, 1) == std::vector<Nat>{7});
  CHECK(h2(1, 1).empty());
}

TEST_CASE("injection index streams parse into the fixed coding") {
  std::istringstream in("1 4 2\n0 5\n2 3\n");
  const std::vector<Nat> indices = parse_injection_indices(in);
  REQUIRE(indices.size() == 3);
  CHECK(indices[0] == injection_index_encode({1, 4, 2}));
  CHECK(indices[1] == injection_index_encode({0, 5, 0}));
  CHECK(indices[2] == injection_index_encode({2, 3, 0}));
  std::istringstream bad("1 4\n");
  CHECK_THROWS_AS(parse_injection_indices(bad), std::invalid_argument);
}

TEST_CASE("argument resolution recognizes the gallery prefixes") {
  CHECK(resolve_order_arg("gallery:finite(2)").size == 2);
  const CoverStream gap_cover = resolve_cover_arg("gallery-gap:omega_plus_omega_star");
  CHECK(gap_cover.at(0).hi == ExtPoint::point(0));
  CHECK(resolve_tree_arg("builtin:zeros_with_noise").member({0, 0, 0, 0}));
  CHECK_THROWS_AS(resolve_order_arg("/no/such/file.ord"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_cover_arg("gallery-gap:omega_plus_one"), std::invalid_argument);
}

#include <doctest.h>

#include "genrank/error.hpp"
#include "genrank/shape.hpp"

using namespace genrank;

TEST_SUITE_BEGIN("shape");

TEST_CASE("interval grammar round-trips") {
  for (const char* text : {"[1,4]", "[2,3)", "(2,3]", "(1,4)", "[0,0]", "(1,2)", "[-3,-1)", "(-2,5]"}) {
    ZZInterval i = ZZInterval::parse(text);
    CHECK(i.to_string() == text);
    auto [p, q] = i.positions();
    CHECK(ZZInterval::from_positions(p, q) == i);
  }
  CHECK(ZZInterval::parse(" [ 2 , 3 ) ").to_string() == "[2,3)");
  CHECK(ZZInterval::parse("[2,3)").decoration() == "co");
  CHECK(ZZInterval::parse("(2,3]").decoration() == "oc");
  CHECK(ZZInterval::parse("(2,3)").decoration() == "o");
  CHECK(ZZInterval::parse("[2,2]").decoration() == "c");
}

TEST_CASE("malformed intervals") {
  CHECK_THROWS_AS(ZZInterval::parse("[3,2]"), Error);
  CHECK_THROWS_AS(ZZInterval::parse("[2,2)"), Error);
  CHECK_THROWS_AS(ZZInterval::parse("{2,3}"), Error);
  CHECK_THROWS_AS(ZZInterval::parse("[2;3]"), Error);
  CHECK_THROWS_AS(ZZInterval::parse("[a,3]"), Error);
  CHECK_THROWS_AS(ZZInterval::parse("[1,2,3]"), Error);
}

TEST_CASE("positions encode vertices evenly and edges oddly") {
  CHECK(ZZInterval::parse("[2,3)").positions() == std::pair<std::int64_t, std::int64_t>{4, 5});
  CHECK(ZZInterval::parse("(2,3]").positions() == std::pair<std::int64_t, std::int64_t>{5, 6});
  CHECK(ZZInterval::parse("(1,2)").positions() == std::pair<std::int64_t, std::int64_t>{3, 3});
  CHECK(ZZInterval::parse("[2,3)") < ZZInterval::parse("[2,3]"));
}

TEST_CASE("extension by one step") {
  Window w{1, 4};
  ZZInterval i = ZZInterval::parse("[2,3]");
  CHECK(zz_extend(i, Side::Minus, w)->to_string() == "(1,3]");
  CHECK(zz_extend(i, Side::Plus, w)->to_string() == "[2,4)");
  CHECK(zz_extend(i, Side::Both, w)->to_string() == "(1,4)");
  CHECK_FALSE(zz_extend(ZZInterval::parse("[1,2]"), Side::Minus, w));
  CHECK_FALSE(zz_extend(ZZInterval::parse("(3,4]"), Side::Both, w));
}

TEST_CASE("zigzag window shape") {
  IndexShape s = IndexShape::zigzag(1, 4);
  CHECK(s.size() == 7);
  CHECK(s.node_name(0) == "v1");
  CHECK(s.node_name(1) == "e2");
  CHECK(s.position(1) == 3);
  CHECK(s.node_at(8) == 6);
  const Poset& p = s.poset();
  Index e2 = *s.find_node("e2");
  CHECK(p.less(e2, *s.find_node("v1")));
  CHECK(p.less(e2, *s.find_node("v2")));
  CHECK(p.covers().size() == 6);
  // contiguous runs of 7 nodes
  CHECK(s.intervals().size() == 28);
  Subposet x = s.parse_interval("[2,3)");
  CHECK(x == Subposet{2, 3});
  CHECK(s.format(x) == "[2,3)");
  CHECK_THROWS_AS(s.parse_interval("[0,2]"), Error);
  CHECK_THROWS_AS(s.to_interval(Subposet{0, 2}), Error);
  CHECK_THROWS_AS(IndexShape::zigzag(3, 2), Error);
}

TEST_CASE("line window shape") {
  IndexShape s = IndexShape::line(0, 3);
  CHECK(s.size() == 4);
  CHECK(s.node_name(2) == "2");
  CHECK(s.poset().less(0, 3));
  CHECK(s.poset().covers().size() == 3);
  CHECK(s.intervals().size() == 10);
  CHECK(s.parse_interval("[1,2]") == Subposet{1, 2});
  CHECK_THROWS_AS(s.parse_interval("[1,2)"), Error);
}

TEST_CASE("general poset shape") {
  Poset p = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
  IndexShape s = IndexShape::general(p);
  CHECK_FALSE(s.is_path());
  Subposet x = s.parse_interval("{a, b}");
  CHECK(s.format(x) == "{a,b}");
  CHECK_THROWS_AS(s.parse_interval("{a,q}"), Error);
  CHECK_THROWS_AS(s.parse_interval("[1,2]"), Error);
  CHECK_THROWS_AS(s.position(0), Error);
  CHECK(s.intervals().size() == 6);
}

TEST_SUITE_END();

#include <doctest.h>

#include <random>

#include "genrank/error.hpp"
#include "genrank/metrics.hpp"
#include "testkit.hpp"

using namespace genrank;

namespace {

DiagramPoint pt(Rational b, Rational d, Decoration deco = Decoration::Closed, std::size_t mult = 1) {
  return {Extended::finite(b), Extended::finite(d), deco, mult};
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("exact rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational::parse("3/6").to_string() == "1/2");
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Extended::neg_inf() < Extended::finite(Rational(-100)));
  CHECK(Extended::finite(Rational(100)) < Extended::pos_inf());
}

TEST_CASE("decorations") {
  for (auto d : {Decoration::Open, Decoration::ClosedOpen, Decoration::OpenClosed, Decoration::Closed})
    CHECK(parse_decoration(to_string(d)) == d);
  CHECK_THROWS_AS(parse_decoration("x"), Error);
  ZZBarcode b{{ZZInterval::parse("[2,3)"), 2}, {ZZInterval::parse("(1,4]"), 1}, {ZZInterval::parse("[1,1]"), 0}};
  DiagramPoints pts = intervals_to_points(b);
  REQUIRE(pts.size() == 2);
  CHECK(*pts[0].decoration == Decoration::OpenClosed);
  CHECK(pts[1].multiplicity == 2);
  CHECK(*pts[1].decoration == Decoration::ClosedOpen);
  CHECK_THROWS_AS(intervals_to_points({{ZZInterval::parse("[2,3]"), -1}}), Error);
}

TEST_CASE("small bottleneck values") {
  CHECK(bottleneck({}, {}) == Distance{false, Rational(0)});
  CHECK(bottleneck({pt(0, 2)}, {}) == Distance{false, Rational(1)});
  CHECK(bottleneck({pt(0, 2)}, {pt(Rational(1, 2), 2)}) == Distance{false, Rational(1, 2)});
  // matching to the diagonal is cheaper than a far partner
  CHECK(bottleneck({pt(0, 1)}, {pt(10, 11)}) == Distance{false, Rational(1, 2)});
  CHECK(bottleneck({pt(0, 2, Decoration::Closed, 2)}, {pt(0, 2)}) == Distance{false, Rational(1)});
  CHECK(epsilon_matching_exists({pt(0, 2)}, {}, Rational(1)));
  CHECK_FALSE(epsilon_matching_exists({pt(0, 2)}, {}, Rational(99, 100)));
  CHECK_THROWS_AS(bottleneck({pt(3, 1)}, {}), Error);
}

TEST_CASE("infinite points") {
  DiagramPoint ess{Extended::finite(Rational(0)), Extended::pos_inf(), Decoration::ClosedOpen, 1};
  DiagramPoint ess2{Extended::finite(Rational(3)), Extended::pos_inf(), Decoration::ClosedOpen, 1};
  CHECK(bottleneck({ess}, {}).infinite);
  CHECK(bottleneck({ess}, {ess2}) == Distance{false, Rational(3)});
  CHECK(bottleneck({ess}, {ess2}).to_string() == "3");
  CHECK(bottleneck({ess}, {}).to_string() == "inf");
}

TEST_CASE("per-decoration distances") {
  DiagramPoints x{pt(0, 2, Decoration::Open), pt(0, 4, Decoration::Closed)};
  DiagramPoints y{pt(0, 4, Decoration::Open)};
  PerDecoration r = bottleneck_per_decoration(x, y);
  CHECK(r.per_class.size() == 4);
  CHECK(r.per_class.at(Decoration::Open) == Distance{false, Rational(2)});
  CHECK(r.per_class.at(Decoration::Closed) == Distance{false, Rational(2)});
  CHECK(r.per_class.at(Decoration::ClosedOpen) == Distance{false, Rational(0)});
  CHECK(r.max == Distance{false, Rational(2)});
  CHECK(bottleneck(x, y) == Distance{false, Rational(1)});
  DiagramPoint bare{Extended::finite(Rational(0)), Extended::finite(Rational(1)), std::nullopt, 1};
  CHECK_THROWS_AS(bottleneck_per_decoration({bare}, {}), Error);
}

TEST_CASE("bottleneck against exhaustive matching") {
  std::mt19937 rng(41);
  for (int t = 0; t < 150; ++t) {
    DiagramPoints x = testkit::random_points(rng, 5, 12), y = testkit::random_points(rng, 5, 12);
    Distance d = bottleneck(x, y);
    REQUIRE_FALSE(d.infinite);
    CHECK(d.value == testkit::brute_bottleneck(x, y));
    CHECK(bottleneck(y, x) == d);
    CHECK(epsilon_matching_exists(x, y, d.value));
    DiagramPoints z = testkit::random_points(rng, 4, 12);
    CHECK(bottleneck(x, z).value <= d.value + bottleneck(y, z).value);
  }
}

TEST_CASE("near pair of signed set diagrams") {
  auto m = testkit::fixture("near_pair_a.json");
  auto n = testkit::fixture("near_pair_b.json");
  Distance d = bottleneck(intervals_to_points(comparison_diagram(m)), intervals_to_points(comparison_diagram(n)));
  CHECK(d == Distance{false, Rational(1, 2)});
  CHECK(d.value <= Rational(2) * Rational(1, 4));
}

TEST_SUITE_END();

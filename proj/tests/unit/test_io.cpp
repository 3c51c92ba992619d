#include "common.hpp"

#include "aquiver/errors.hpp"
#include "aquiver/io.hpp"

#include <string>

using namespace aquiver;
using namespace aquiver::testing;

namespace {

std::string error_of(const std::string& text) {
  try {
    document_from_json(parse_json(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("orientation round trip") {
  const Orientation o({{q("1/2"), CriticalKind::sink}, {Rational(2), CriticalKind::source}}, EmptyDirection::ascending);
  CHECK(orientation_from_json(to_json(o)) == o);
  const Json j = parse_json(R"({"criticals":[{"pos":"1/2","kind":"sink"}],"empty_direction":"descending"})");
  CHECK(orientation_from_json(j).criticals().size() == 1);
  CHECK(orientation_from_any(parse_json(R"({"orientation":{"criticals":[]}})")) == Orientation::descending());
}

TEST_CASE("interval and bar round trip") {
  const Interval i = iv("(-inf,1/3]");
  CHECK(interval_from_json(to_json(i)) == i);
  const BarMultiset b = bars({"[0,1)", "[0,1)", "{2}", "(-inf,+inf)"});
  CHECK(bars_from_json(to_json(b)) == b);
  CHECK(to_json(b).dump() == to_json(bars_from_json(to_json(b))).dump());
}

TEST_CASE("tame round trip") {
  const Orientation o = sink0_source1();
  const TameRep v = scramble(from_bars(o, bars({"[-1,2)", "(0,1]"}), Field::prime(5)), 11);
  CHECK(tame_from_json(to_json(v), o, Field::prime(5)) == v);
  Document d{o, Field::prime(5), std::nullopt, v};
  const Document back = document_from_json(to_json(d));
  REQUIRE(back.tame.has_value());
  CHECK(*back.tame == v);
  CHECK(back.field == Field::prime(5));
}

TEST_CASE("input errors carry a location") {
  CHECK(error_of("{").find("JSON syntax error at line 1") != std::string::npos);
  CHECK(error_of(R"({"orientation":{"criticals":[{"pos":"x","kind":"sink"}]},"bars":[]})")
            .find("/orientation/criticals/0/pos") != std::string::npos);
  CHECK(error_of(R"({"orientation":{"criticals":[{"pos":"0","kind":"left"}]},"bars":[]})")
            .find("/orientation/criticals/0/kind") != std::string::npos);
  CHECK(error_of(R"({"orientation":{},"bars":[{"lo":"1","lo_closed":true,"hi":"0","hi_closed":true}]})")
            .find("/bars/0") != std::string::npos);
  CHECK_FALSE(error_of(R"({"orientation":{},"bars":[],"tame":{}})").empty());
  CHECK_FALSE(error_of(R"({"orientation":{}})").empty());
}

TEST_CASE("parse_field") {
  CHECK(parse_field("Q") == Field::rationals());
  CHECK(parse_field("Fp:5") == Field::prime(5));
  CHECK(parse_field("F7") == Field::prime(7));
  CHECK_THROWS_AS(parse_field("F4"), InputError);
  CHECK_THROWS_AS(parse_field("R"), InputError);
}

TEST_CASE("ar answer json") {
  const Json j = to_json(ar_ending_at(sink0_source1(), iv("(1/4,1/2]")));
  CHECK(j["status"] == "Exists");
  CHECK(j["left"] == "[1/4,1/2)");
  CHECK(to_json(ar_ending_at(sink0_source1(), iv("{1/3}")))["status"] == "ProvenNonexistent");
}

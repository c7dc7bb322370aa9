#include "helpers.hpp"

#include "toricends/error.hpp"
#include "toricends/reduce.hpp"

#include <doctest.h>

using namespace toric;
using namespace testing_support;

namespace {

EndDescription end(const char* boundary, SlopeTarget t, SignData s) {
  EndDescription e;
  e.boundary = {S(boundary), 1};
  e.target = std::move(t);
  e.signs = std::move(s);
  return e;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

OpenToricAnnulus annulus(RotativeLayers plus, RotativeLayers minus) {
  OpenToricAnnulus a;
  a.middle = {S("-1"), 1};
  a.plus = end("-1", rational("-3", true), SignData::finite(signs_from("+-")));
  a.plus.rotative = std::move(plus);
  a.minus = end("1", rational("inf", false), SignData({}, TailRule::alternating()));
  a.minus.rotative = std::move(minus);
  return a;
}

}  // namespace

TEST_CASE("minus_side_reflection") {
  GL2ZMatrix r = minus_side_reflection();
  CHECK(r.apply(S("-1")) == S("1"));
  CHECK(r.apply(S("2/3")) == S("-2/3"));
  CHECK(r.apply(S("inf")) == S("inf"));
}

TEST_CASE("last_unit_fraction") {
  CHECK(last_unit_fraction(S("-1"), rational("-3/2", false)) == S("-1"));
  CHECK(last_unit_fraction(S("-1"), minus_sqrt2()) == S("-1"));
  CHECK(last_unit_fraction(S("-1"), rational("-1/3", false)) == S("-1/4"));
  CHECK(last_unit_fraction(S("-1"), rational("-2/5", false)) == S("-1/3"));
  CHECK(last_unit_fraction(S("-1"), rational("2/5", false)) == S("1/2"));
  CHECK(last_unit_fraction(S("-1"), rational("1/3", false)) == S("1/2"));
  CHECK(last_unit_fraction(S("-1"), rational("1/3", true)) == S("1/3"));
  CHECK(last_unit_fraction(S("-1"), rational("5/2", false)) == S("inf"));
  CHECK(last_unit_fraction(S("-1"), rational("inf", false)) == S("-1"));
  CHECK(last_unit_fraction(S("-1"), rational("0", false)) == S("-1"));
}

TEST_CASE("solid_torus_factor") {
  auto e = end("-1", rational("-3/2", false), SignData(signs_from("+"), TailRule::all(Sign::minus)));
  auto st = solid_torus_factor(e);
  CHECK(st.realized_start == S("-1"));
  CHECK(st.dropped_slices == 0);
  CHECK(st.end == e);

  // Path -1, inf, 1, 1/2, 3/7, ... toward 2/5; s(r) = 1/2 after three slices.
  auto pos = end("-1", rational("2/5", false), SignData(signs_from("+-+"), TailRule::all(Sign::plus)));
  auto ps = solid_torus_factor(pos);
  CHECK(ps.realized_start == S("1/2"));
  CHECK(ps.dropped_slices == 3);
  CHECK(ps.end.boundary.slope == S("1/2"));
  CHECK(ps.end.signs == pos.signs.drop(ps.dropped_slices));

  auto [s, inv] = classify_solid_torus(e);
  CHECK(s == S("-1"));
  CHECK(std::holds_alternative<MinimallyTwisting>(inv.kind));

  CHECK(code_of([] { classify_solid_torus(end("-1", rational("0", true), SignData::finite(signs_from("+")))); }) ==
        ErrorCode::attained_zero_slope);
}

TEST_CASE("normalize_rotativity") {
  auto a = normalize_rotativity(annulus(RotativeLayers::finite(1, Sign::plus), RotativeLayers::finite(2, Sign::plus)));
  CHECK(a.plus.rotative == RotativeLayers::finite(3, Sign::plus));
  CHECK(a.minus.rotative.empty());

  auto b = normalize_rotativity(annulus(RotativeLayers::none(), RotativeLayers::finite(2, Sign::minus)));
  CHECK(b.plus.rotative == RotativeLayers::finite(2, Sign::minus));

  auto c = normalize_rotativity(annulus(RotativeLayers::finite(1, Sign::plus), RotativeLayers::infinitely_many(Sign::plus)));
  CHECK(c.plus.rotative == RotativeLayers::infinitely_many(Sign::plus));

  auto id = annulus(RotativeLayers::none(), RotativeLayers::none());
  CHECK(normalize_rotativity(id) == id);

  CHECK(code_of([] {
          normalize_rotativity(annulus(RotativeLayers::finite(1, Sign::plus), RotativeLayers::finite(1, Sign::minus)));
        }) == ErrorCode::mixed_rotativity);
  CHECK(code_of([] {
          auto x = annulus(RotativeLayers::none(), RotativeLayers::none());
          x.middle.division = 2;
          normalize_rotativity(x);
        }) == ErrorCode::no_division_one_torus);
  CHECK(code_of([] {
          auto x = annulus(RotativeLayers::none(), RotativeLayers::none());
          x.minus.boundary.slope = S("-1");
          normalize_rotativity(x);
        }) == ErrorCode::validation);
}

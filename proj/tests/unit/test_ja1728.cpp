#include "doctest.h"
#include "edslab/ja1728.hpp"
#include "testing.hpp"

using namespace edslab;

TEST_CASE("parameter classes") {
  CHECK(ea_params(1).class2 == EAClass2::OneMod4);
  CHECK(ea_params(3).class2 == EAClass2::ThreeMod4);
  CHECK(ea_params(2).class2 == EAClass2::Ord2One);
  CHECK(ea_params(4).class2 == EAClass2::FourMod16);
  CHECK(ea_params(12).class2 == EAClass2::TwelveMod16);
  CHECK(ea_params(8).class2 == EAClass2::Ord2Three);
  CHECK(ea_params(25).curve == curve_from_string("[0,0,0,-25,0]"));
  CHECK(ea_params(25).curve.disc == 64 * 25 * 25 * 25);
  CHECK(testing::error_of([] { ea_params(16); }) == ErrorCode::InvalidA);
  CHECK(testing::error_of([] { ea_params(3 * 81); }) == ErrorCode::InvalidA);
  CHECK(testing::error_of([] { ea_params(0); }) == ErrorCode::InvalidA);
  CHECK(testing::error_of([] { ea_params(-5); }) == ErrorCode::InvalidA);
}

TEST_CASE("reduction table agrees with Tate's algorithm") {
  int checked = 0;
  for (long A = 1; A <= 200; ++A) {
    if (testing::error_of([&] { ea_params(A); })) continue;
    Curve E = curve_new(0, 0, 0, -A, 0);
    for (const auto& r : ea_reduction_table(A)) {
      CAPTURE(A);
      CAPTURE(r.p.get_str());
      ReductionInfo t = tate_reduction(E, r.p);
      CHECK(t.kodaira_string() == r.kodaira_string());
      ++checked;
    }
  }
  CHECK(checked > 200);
  CHECK(ea_reduction_table(25).size() == 2);
  CHECK(ea_reduction_table(25)[1].kodaira_string() == "I0*");
  CHECK(ea_reduction_table(12)[0].kodaira_string() == "I3*");
}

TEST_CASE("height estimates") {
  Curve E = curve_from_string("[0,0,0,-25,0]");
  Point P = Point::parse("-4,6");
  for (long k = 1; k <= 8; ++k) {
    Point Q = point_mul(E, k, P);
    EADifference d = ea_height_difference_check(25, Q);
    CHECK(d.ok);
    if (Q.x > 0) {
      EAHeightBound hb = ea_height_lower_bound(25, Q);
      CHECK(hb.ok);
      CHECK(testing::close(hb.bound, log(BigFloat(50, 192)) / 16, BigFloat::from_double(1e-50, 192)));
    } else {
      CHECK(testing::error_of([&] { ea_height_lower_bound(25, Q); }) == ErrorCode::BoundedComponent);
    }
  }
  CHECK(testing::error_of([&] { ea_height_lower_bound(25, Point::parse("0,0")); }) == ErrorCode::TorsionPoint);
  Point Q12 = point_mul(curve_from_string("[0,0,0,-12,0]"), 2, Point::parse("-2,4"));
  EAHeightBound hb12 = ea_height_lower_bound(12, Q12);
  CHECK(hb12.ok);
  CHECK(testing::close(hb12.bound, log(BigFloat(24, 192)) / 64, BigFloat::from_double(1e-50, 192)));
}

TEST_CASE("double has good reduction") {
  CHECK(ea_double_good_reduction(25, Point::parse("-4,6")));
}

TEST_CASE("even index compositeness") {
  Point P = Point::parse("-4,6");
  EACompositeReport low = ea_even_index_composite(25, P, 3);
  CHECK(low.verdict == EAVerdict::OutsideRange);
  CHECK(low.index == 6);
  for (const auto& [key, v] : testing::oracle()["E_25_even_index"].items()) {
    long n = std::stol(key);
    EACompositeReport r = ea_even_index_composite(25, P, n);
    CAPTURE(n);
    CHECK(r.index == 2 * n);
    CHECK(static_cast<long>(r.B.get_str().size()) == v["digits"].get<long>());
    CHECK((r.verdict == EAVerdict::CompositeProven) == !v["is_prime"].get<bool>());
    CHECK_FALSE(r.criteria.empty());
  }
}

TEST_CASE("odd multiple compositeness") {
  Point Pp = Point::parse("-4,6");
  CHECK(ea_odd_multiple_threshold(25) == 4);
  CHECK(ea_odd_multiple_threshold(28) == 8);
  CHECK(testing::error_of([&] { ea_odd_multiple_composite(25, Pp, 2, 5); }) == ErrorCode::EvenM);
  CHECK(testing::error_of([&] { ea_odd_multiple_composite(25, Pp, 1, 5); }) == ErrorCode::PreconditionViolated);
  Point far = point_mul(ea_params(25).curve, 2, Pp);
  CHECK(testing::error_of([&] { ea_odd_multiple_composite(25, far, 3, 5); }) == ErrorCode::NotOnBoundedComponent);
  CHECK(ea_odd_multiple_composite(25, Pp, 3, 3).verdict == EAVerdict::OutsideRange);
  for (long n = 4; n <= 12; ++n) {
    EACompositeReport r = ea_odd_multiple_composite(25, Pp, 3, n);
    CAPTURE(n);
    CHECK(r.verdict == EAVerdict::CompositeProven);
    CHECK(r.index == n);
    CHECK_FALSE(r.criteria.empty());
  }
  CHECK(std::string(ea_verdict_name(EAVerdict::CompositeProven)) == "CompositeProven");
}

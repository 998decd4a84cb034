#include <doctest.h>

#include <numeric>

#include "casson3/enumerate.hpp"
#include "casson3/fusion.hpp"

using namespace casson3;

namespace {

const AlcovePoint kThird{-1, 0, 1, 3};  // (-1/3, 0, 1/3)

AlcovePoint vertex_point(const RationalTriple& v) {
  i64 d = 1;
  for (const auto& x : v) d = std::lcm(d, x.denominator());
  const auto scaled = [&](const Rational& x) { return x.numerator() * (d / x.denominator()); };
  return AlcovePoint::make(scaled(v[0]), scaled(v[1]), d);
}

}  // namespace

TEST_SUITE("fusion") {
  TEST_CASE("constraint table has the displayed shape") {
    int upper = 0, lower = 0, bound_one = 0, bound_minus_one = 0;
    for (const auto& f : kFusionConstraints) {
      (f.upper ? upper : lower) += 1;
      bound_one += f.bound == 1;
      bound_minus_one += f.bound == -1;
    }
    CHECK(upper == 9);
    CHECK(lower == 9);
    CHECK(bound_one == 3);
    CHECK(bound_minus_one == 3);
    CHECK(kFusionConstraints[0].ia == 0);
    CHECK(kFusionConstraints[0].ib == 1);
    CHECK(kFusionConstraints[0].ic == 1);
  }

  TEST_CASE("margins at the third-root point") {
    const FusionMargins m = inequality_margins(kThird, kThird, kThird);
    for (int i = 0; i < 18; ++i) CHECK(m.value[i] > 0);
    // a1 + b2 + c2 = -1/3 <= 0
    CHECK(m.at(0) == Rational(1, 3));
    // a1 + b1 + c2 = -2/3 >= -1
    CHECK(m.at(11) == Rational(1, 3));
    CHECK(membership(kThird, kThird, kThird) == Membership::Interior);
  }

  TEST_CASE("identity triple is tight") {
    const AlcovePoint z{0, 0, 0, 3};
    const FusionMargins m = inequality_margins(z, z, z);
    CHECK(m.value[0] == 0);
    CHECK(m.any_tight());
    CHECK(membership(z, z, z) == Membership::BoundaryFirstKind);
  }

  TEST_CASE("slice bounds") {
    const AlcovePoint a{-3, 0, 3, 9};
    const AlcovePoint b{-6, 3, 3, 15};
    const SliceBounds s = slice_bounds(a, b);
    CHECK(s.Xl() == Rational(-8, 15));
    CHECK(s.Xu() == Rational(-1, 5));

    const AlcovePoint z{0, 0, 0, 3};
    const SliceBounds t = slice_bounds(z, z);
    CHECK(t.Xl() == Rational(0));
    CHECK(t.Xu() == Rational(0));
  }

  TEST_CASE("second-kind boundary") {
    const AlcovePoint a{-2, 1, 1, 5};
    bool found = false;
    for (i64 k1 = -60; k1 <= 0 && !found; ++k1) {
      for (i64 k2 = k1; k2 <= 60 && !found; ++k2) {
        if (!AlcovePoint::in_alcove(k1, k2, -k1 - k2, 60)) continue;
        const AlcovePoint c{k1, k2, -k1 - k2, 60};
        if (classify_multiplicity(c) != Multiplicity::Distinct) continue;
        if (membership(a, c.inverse(), c) == Membership::BoundarySecondKind) found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("membership is symmetric in a and b") {
    const i64 D = 12;
    std::vector<AlcovePoint> pts;
    for (i64 k1 = -D; k1 <= 0; ++k1) {
      for (i64 k2 = k1; k2 <= D; ++k2) {
        if (AlcovePoint::in_alcove(k1, k2, -k1 - k2, D)) pts.push_back({k1, k2, -k1 - k2, D});
      }
    }
    int checked = 0;
    for (std::size_t i = 0; i < pts.size(); i += 3) {
      for (std::size_t j = 0; j < pts.size(); j += 2) {
        for (std::size_t k = 0; k < pts.size(); k += 5) {
          CHECK(membership(pts[i], pts[j], pts[k]) == membership(pts[j], pts[i], pts[k]));
          ++checked;
        }
      }
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("slice construction") {
    const AlcovePoint dbl{-2, 1, 1, 5};
    const AlcovePoint dst{-3, 0, 3, 15};
    CHECK_THROWS_AS(FusionSlice::make(dbl, dbl, 0), Error);
    CHECK_THROWS_AS(FusionSlice::make(AlcovePoint{0, 0, 0, 3}, dst, 0), Error);
    CHECK(FusionSlice::make(dbl, dst, 0).kind == SliceKind::TypeI);
    CHECK(FusionSlice::make(dst, dst, 0).kind == SliceKind::TypeII);
  }

  TEST_CASE("vertex counts and validity") {
    for (const auto& [p, q, r] : {std::array<i64, 3>{3, 5, 7}, {5, 7, 11}, {2, 7, 9}, {4, 9, 5}}) {
      const SurgeryData d = normalize_mod3(make_surgery_data(p, q, r));
      for (const FusionSlice& s : generate_slices(d)) {
        const auto v = slice_vertices(s);
        if (s.bounds.empty_box()) {
          CHECK(v.empty());
          continue;
        }
        CHECK(v.size() >= 6);
        CHECK(v.size() <= (s.kind == SliceKind::TypeI ? 6u : 9u));
        for (const auto& x : v) {
          CHECK(x[0] + x[1] + x[2] == Rational(0));
          const Membership m = membership(s.a, s.b, vertex_point(x));
          CHECK((m == Membership::BoundaryFirstKind || m == Membership::BoundarySecondKind));
        }
      }
    }
  }

  TEST_CASE("Type II corners on the alcove walls") {
    const SurgeryData d = normalize_mod3(make_surgery_data(5, 7, 11));
    bool full_nonagon = false;
    for (const FusionSlice& s : generate_slices(d)) {
      if (s.kind != SliceKind::TypeII || s.bounds.empty_box()) continue;
      const auto v = slice_vertices(s);
      if (v.size() != 9) continue;
      full_nonagon = true;
      CHECK(v[4][0] == s.bounds.Xl());
      CHECK(v[4][1] == Rational(-1) - 2 * s.bounds.Xl());
      CHECK(v[4][2] == Rational(1) + s.bounds.Xl());
    }
    CHECK(full_nonagon);
  }
}

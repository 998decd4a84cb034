#include <doctest.h>

#include <numeric>

#include "casson3/family.hpp"

using namespace casson3;

namespace {

std::vector<FamilySample> samples(std::initializer_list<i64> taus, i64 n0 = 1) {
  std::vector<FamilySample> out;
  for (const i64 t : taus) out.push_back({n0++, t});
  return out;
}

std::vector<i64> values(const std::vector<FamilySample>& s) {
  std::vector<i64> out;
  for (const auto& x : s) out.push_back(x.tau);
  return out;
}

}  // namespace

TEST_SUITE("family") {
  TEST_CASE("family values") {
    CHECK(values(family_tau({2, 3, 1}, 1, 3)) == std::vector<i64>{4, 14, 30});
    CHECK(values(family_tau({2, 5, 3}, 1, 2)) == std::vector<i64>{54, 172});
    CHECK(values(family_tau({3, 5, 2}, 1, 1)) == std::vector<i64>{352});
    CHECK(values(family_tau({2, 3, -1}, 1, 3)) == std::vector<i64>{2, 10, 24});
    CHECK(FamilySpec{2, 7, 3}.r(2) == 31);
  }

  TEST_CASE("family input checks") {
    CHECK_THROWS_AS(family_tau({2, 4, 1}, 1, 2), Error);
    CHECK_THROWS_AS(family_tau({2, 3, 3}, 1, 2), Error);
    CHECK_THROWS_AS(family_tau({2, 3, -7}, 1, 2), Error);
    CHECK_THROWS_AS(family_tau({2, 3, 1}, 3, 2), Error);
  }

  TEST_CASE("quadratic fits") {
    CHECK(fit_quadratic(samples({4, 14, 30, 52})) == QuadraticFit{Rational(3), Rational(1), Rational(0)});
    CHECK(fit_quadratic(samples({5, 5, 5, 5})) == QuadraticFit{Rational(0), Rational(0), Rational(5)});
    // 3n^2 + n starting at n = 2
    CHECK(fit_quadratic(samples({14, 30, 52}, 2)) == QuadraticFit{Rational(3), Rational(1), Rational(0)});
    const QuadraticFit half = fit_quadratic(samples({1, 3, 6, 10}));
    CHECK(half.A == Rational(1, 2));
    CHECK(half.B == Rational(1, 2));
  }

  TEST_CASE("non-quadratic samples") {
    try {
      fit_quadratic(samples({1, 2, 4, 8}));
      FAIL("expected NotQuadratic");
    } catch (const NotQuadraticError& e) {
      CHECK(e.kind() == ErrorKind::NotQuadratic);
      CHECK(e.n() == 4);
    }
    CHECK_THROWS_AS(fit_quadratic(samples({1, 2})), Error);
    CHECK_THROWS_AS(fit_quadratic({{1, 4}, {2, 14}, {4, 52}}), Error);
  }

  TEST_CASE("closed forms") {
    CHECK(conway_leading_coeff(2, 3) == Rational(3));
    CHECK(conway_leading_coeff(4, 5) == Rational(1011));
    CHECK(conway_leading_coeff(3, 7) == Rational(1128));
    CHECK(b_coefficient_formula(2, 5) == Rational(9));
    CHECK(b_coefficient_formula(3, 4) == Rational(21));
    CHECK(b_coefficient_formula(2, 3) == Rational(1));
    CHECK(b_coefficient_formula(4, 7) == Rational(320));
    try {
      b_coefficient_formula(5, 7);
      FAIL("expected UnsupportedP");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedP);
    }
  }

  TEST_CASE("fits for the 1/n surgery families match the closed forms") {
    for (i64 p = 2; p <= 4; ++p) {
      for (i64 q = p + 1; q <= 11; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const QuadraticFit fit = fit_quadratic(family_tau({p, q, -1}, 1, 4));
        CHECK_MESSAGE(fit.A == conway_leading_coeff(p, q), p << "," << q);
        CHECK_MESSAGE(-fit.B == b_coefficient_formula(p, q), p << "," << q);
        CHECK(fit.C == Rational(0));
      }
    }
  }

  TEST_CASE("m = 1 has no constant term") {
    for (const auto& [p, q] : {std::pair<i64, i64>{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 7}}) {
      CHECK(fit_quadratic(family_tau({p, q, 1}, 1, 4)).C == Rational(0));
    }
  }

  TEST_CASE("third differences vanish") {
    for (const FamilySpec& spec : {FamilySpec{2, 3, 1}, {2, 7, 3}, {3, 5, 2}, {4, 5, 19}, {5, 7, 3}}) {
      const auto v = values(family_tau(spec, 1, 6));
      for (std::size_t i = 0; i + 3 < v.size(); ++i) {
        CHECK(v[i + 3] - 3 * v[i + 2] + 3 * v[i + 1] - v[i] == 0);
      }
    }
  }
}

#include <doctest.h>

#include <numeric>

#include "casson3/arith.hpp"

using namespace casson3;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("floor and ceil division round toward the right infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(mod_floor(-1, 3) == 2);
    CHECK(mod_floor(5, 3) == 2);
  }

  TEST_CASE("canonical Bezout pair") {
    const SurgeryData d = make_surgery_data(2, 3, 5);
    CHECK(d.a == 1);
    CHECK(d.c == -4);
    CHECK(d.bezout_value() == 1);

    const SurgeryData e = make_surgery_data(3, 5, 2);
    CHECK(e.a == 1);
    CHECK(e.c == -1);
    CHECK(e.a_mod3 == 1);
    CHECK(e.c_mod3 == 2);
  }

  TEST_CASE("invalid triples") {
    CHECK(kind_of([] { make_surgery_data(2, 4, 5); }) == ErrorKind::NotCoprime);
    CHECK(kind_of([] { make_surgery_data(0, 3, 5); }) == ErrorKind::NonPositive);
    CHECK(kind_of([] { make_surgery_data(3, -5, 7); }) == ErrorKind::NonPositive);
    CHECK(kind_of([] { make_surgery_data(1000003, 1000033, 1000037); }) == ErrorKind::Overflow);
  }

  TEST_CASE("trivial sphere") {
    const SurgeryData d = make_surgery_data(1, 1, 1);
    CHECK(d.bezout_value() == 1);
  }

  TEST_CASE("mod 3 normalization") {
    SUBCASE("3 does not divide pq") {
      const SurgeryData d = normalize_mod3(make_surgery_data(2, 5, 11));
      CHECK(d.a_mod3 == 0);
      CHECK(d.c_mod3 == 1);
      CHECK(d.bezout_value() == 1);
    }
    SUBCASE("3 divides pq") {
      const SurgeryData d = normalize_mod3(make_surgery_data(3, 5, 16), 1);
      CHECK(d.a_mod3 == 2);
      CHECK(d.c_mod3 == 2);
      CHECK(d.bezout_value() == 1);
    }
    SUBCASE("m must match r") {
      CHECK(kind_of([] { normalize_mod3(make_surgery_data(3, 5, 16), 2); }) == ErrorKind::InvalidArgument);
    }
    SUBCASE("negative m") {
      const SurgeryData d = normalize_mod3(make_surgery_data(3, 5, 14), -1);
      CHECK(d.c_mod3 == 1);
      CHECK(d.a_mod3 == mod_floor(8 * -1, 3));
    }
  }

  TEST_CASE("normalization is idempotent and preserves the identity") {
    int checked = 0;
    for (i64 p = 1; p <= 9; ++p) {
      for (i64 q = p; q <= 11; ++q) {
        for (i64 r = q; r <= 40; ++r) {
          if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
          const SurgeryData d = normalize_mod3(make_surgery_data(p, q, r));
          CHECK(d.bezout_value() == 1);
          CHECK(normalize_mod3(d) == d);
          const i64 pq = p * q;
          if (pq % 3 != 0) {
            CHECK(d.a_mod3 == 0);
            CHECK(d.c_mod3 == mod_floor(pq, 3));
          } else {
            const i64 m = r % pq;
            CHECK(d.a_mod3 == mod_floor((p + q) * m, 3));
            CHECK(d.c_mod3 == mod_floor(-m, 3));
          }
          ++checked;
        }
      }
    }
    CHECK(checked > 300);
  }

  TEST_CASE("framing shifts keep the identity") {
    const SurgeryData d = make_surgery_data(3, 7, 10);
    for (i64 k = -5; k <= 5; ++k) {
      const SurgeryData s = shift_framing(d, k);
      CHECK(s.bezout_value() == 1);
      CHECK_NOTHROW(validate(s));
    }
  }

  TEST_CASE("validate rejects a broken identity") {
    SurgeryData d = make_surgery_data(2, 3, 5);
    d.c += 1;
    d.c_mod3 = static_cast<int>(mod_floor(d.c, 3));
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidArgument);
  }
}

#include "doctest.h"

#include "ckf/quadfield.hpp"
#include "ckf/rational.hpp"
#include "ckf/rng.hpp"

using namespace ckf;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK((Rat(1, 6) + Rat(1, 3)) == Rat(1, 2));
  CHECK((Rat(3, 4) * Rat(2, 9)) == Rat(1, 6));
  CHECK((Rat(1, 2) / Rat(1, 4)) == Rat(2));
  CHECK(Rat(5, 3) > Rat(3, 2));
  CHECK(Rat(-7).abs() == Rat(7));
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational parse/print round trip") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::int64_t p = static_cast<std::int64_t>(rng.next_u64() % 2001) - 1000;
    std::int64_t q = 1 + static_cast<std::int64_t>(rng.next_u64() % 97);
    Rat r(p, q);
    CHECK(Rat::parse(r.str()) == r);
  }
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rat(8), std::overflow_error);
}

TEST_CASE("quadratic field arithmetic") {
  QF r2 = QF::sqrt2(), r3 = QF::sqrt3(), r6 = QF::sqrt6();
  CHECK(r2 * r2 == QF(Rat(2)));
  CHECK(r3 * r3 == QF(Rat(3)));
  CHECK(r2 * r3 == r6);
  CHECK(r6 * r6 == QF(Rat(6)));
  QF x = QF(Rat(1, 2)) + QF(Rat(3)) * r2 - QF(Rat(2, 5)) * r3 + r6;
  QF y = QF(Rat(-2)) + r3;
  CHECK((x * y) / y == x);
  CHECK((x / x) == QF(Rat(1)));
  CHECK_THROWS_AS(x / QF(Rat(0)), std::domain_error);
}

TEST_CASE("quadratic field exact signs") {
  QF r2 = QF::sqrt2(), r3 = QF::sqrt3(), r6 = QF::sqrt6();
  // 1.4142... < 1.4143
  CHECK((r2 - QF(Rat(14143, 10000))).sign() < 0);
  CHECK((r2 - QF(Rat(14142, 10000))).sign() > 0);
  // sqrt6 - sqrt2 - sqrt3 + 1 > 0  (~0.303)
  CHECK((r6 - r2 - r3 + QF(Rat(1))).sign() > 0);
  // sqrt2 + sqrt3 - sqrt6 - 1/2 > 0 (~0.196), flip the rational to cross zero
  CHECK((r2 + r3 - r6 - QF(Rat(1, 2))).sign() > 0);
  CHECK((r2 + r3 - r6 - QF(Rat(7, 10))).sign() < 0);
  CHECK(QF(Rat(0)).sign() == 0);
  // agreement with doubles on a spread of values
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    auto small = [&rng]() {
      return Rat(static_cast<std::int64_t>(rng.next_u64() % 11) - 5,
                 1 + static_cast<std::int64_t>(rng.next_u64() % 6));
    };
    QF v(small(), small(), small(), small());
    double d = v.to_double();
    if (std::abs(d) > 1e-9) CHECK(v.sign() == (d > 0 ? 1 : -1));
  }
}

TEST_CASE("exact vectors") {
  ExactVec x{QF(Rat(1)), QF(Rat(2)), QF(Rat(-1))};
  ExactVec y{QF(Rat(0)), QF(Rat(1, 2)), QF(Rat(1))};
  CHECK(dot(x, y) == QF(Rat(0)));
  CHECK(norm2(x) == QF(Rat(6)));
  CHECK(lex_compare(x, x) == 0);
  CHECK(lex_compare(y, x) < 0);
  CHECK(is_zero(x - x));
}

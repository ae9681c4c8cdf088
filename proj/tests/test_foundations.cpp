#include <random>

#include "doctest.h"
#include "hqft/foundations.hpp"

using namespace hqft;

TEST_CASE("group_mul is XOR on bit vectors") {
  const auto e = GroupElement::parse("00");
  const auto x = GroupElement::parse("10");
  const auto y = GroupElement::parse("01");
  CHECK(e * e == e);
  CHECK(x * x == e);
  CHECK(x * y == GroupElement::parse("11"));
  CHECK(x.index() == 1);
  CHECK(y.index() == 2);
  CHECK(x.to_string() == "10");
  CHECK_THROWS_AS(group_mul(x, GroupElement::parse("1")), InputError);
  CHECK_THROWS_AS(GroupElement::parse("12"), InputError);
}

TEST_CASE("group law holds exhaustively for k <= 3") {
  for (int k = 0; k <= 3; ++k) {
    const auto G = all_elements(k);
    CHECK(G.size() == group_order(k));
    const auto e = GroupElement::identity(k);
    for (const auto& a : G) {
      CHECK(a * e == a);
      CHECK(a * a == e);
      for (const auto& b : G) {
        CHECK(a * b == b * a);
        for (const auto& c : G) CHECK((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("ring descriptors") {
  CHECK(RingDesc::parse("Z") == RingDesc::integers());
  CHECK(RingDesc::parse("Q") == RingDesc::rationals());
  CHECK(RingDesc::parse("Z/7") == RingDesc::integers_mod(7));
  CHECK(RingDesc::integers_mod(7).to_string() == "Z/7");
  CHECK_THROWS_AS(RingDesc::integers_mod(1), InputError);
  CHECK_THROWS_AS(RingDesc::parse("Z/1"), InputError);
  CHECK_THROWS_AS(RingDesc::parse("R"), InputError);
  CHECK(RingDesc::integers_mod(4).elements().size() == 4);
}

TEST_CASE("scalar normalization and parsing") {
  const auto z5 = RingDesc::integers_mod(5);
  CHECK(z5.from_int(-1).to_string() == "4");
  CHECK(z5.parse_scalar("12").to_string() == "2");
  const auto q = RingDesc::rationals();
  CHECK(q.parse_scalar("2/-4").to_string() == "-1/2");
  CHECK_THROWS_AS(z5.parse_scalar("1/2"), InputError);
  CHECK_THROWS_AS(RingDesc::integers().parse_scalar("x"), InputError);
  CHECK_THROWS_AS(z5.one() + RingDesc::integers().one(), InputError);
}

TEST_CASE("scalar_inv and is_unit") {
  const auto z5 = RingDesc::integers_mod(5);
  CHECK(scalar_inv(z5.from_int(2)) == z5.from_int(3));
  CHECK(scalar_inv(RingDesc::integers().one()) == RingDesc::integers().one());
  CHECK(scalar_inv(RingDesc::integers().from_int(-1)) == RingDesc::integers().from_int(-1));
  CHECK_THROWS_AS(scalar_inv(RingDesc::integers().from_int(2)), NotAUnit);
  CHECK_FALSE(is_unit(RingDesc::rationals().zero()));
  CHECK(is_unit(RingDesc::rationals().parse_scalar("-3/7")));
  const auto z6 = RingDesc::integers_mod(6);
  CHECK_FALSE(is_unit(z6.from_int(3)));
  CHECK(is_unit(z6.from_int(5)));
  CHECK(z6.from_int(5) * z6.from_int(5) == z6.one());
}

TEST_CASE("units of Z/n agree with a gcd oracle") {
  for (long n = 2; n <= 30; ++n) {
    const auto ring = RingDesc::integers_mod(n);
    for (long v = 0; v < n; ++v) {
      long a = v, b = n;
      while (b) {
        long t = a % b;
        a = b;
        b = t;
      }
      const Scalar x = ring.from_int(v);
      CHECK(is_unit(x) == (a == 1));
      if (a == 1) CHECK(x * scalar_inv(x) == ring.one());
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  const std::vector<RingDesc> rings = {RingDesc::integers(), RingDesc::rationals(),
                                       RingDesc::integers_mod(2), RingDesc::integers_mod(6),
                                       RingDesc::integers_mod(97)};
  for (const auto& R : rings) {
    auto draw = [&] {
      if (R.kind() == RingKind::Rationals) {
        long den = dist(rng);
        if (den == 0) den = 1;
        return R.parse_scalar(std::to_string(dist(rng)) + "/" + std::to_string(den));
      }
      return R.from_int(dist(rng));
    };
    for (int i = 0; i < 200; ++i) {
      const Scalar a = draw(), b = draw(), c = draw();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + R.zero() == a);
      CHECK(a * R.one() == a);
      CHECK(a + (-a) == R.zero());
    }
  }
}

#include "doctest.h"

#include "support.hpp"
#include "ydlcat/errors.hpp"

using namespace ydlcat;
using namespace testing_support;

TEST_CASE("mul1 unit, inverse and associativity") {
  const auto q = Q();
  auto s3 = kS3(q);
  auto auts = s3_automorphisms(s3);
  const auto id = HopfAutomorphism::identity(s3);
  const AutPair1 unit(id, id);
  for (const auto& a : auts)
    for (const auto& b : auts) {
      AutPair1 p(a, b);
      CHECK(mul1(unit, p) == p);
      CHECK(mul1(p, unit) == p);
      AutPair1 printed_inverse(aut_inverse(a),
                               aut_compose(aut_inverse(a), aut_compose(aut_inverse(b), a)));
      CHECK(mul1(p, printed_inverse) == unit);
      CHECK(mul1(printed_inverse, p) == unit);
      CHECK(inv1(p) == printed_inverse);
    }
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    AutPair1 x(pick(auts, rng), pick(auts, rng)), y(pick(auts, rng), pick(auts, rng)),
        z(pick(auts, rng), pick(auts, rng));
    CHECK(mul1(mul1(x, y), z) == mul1(x, mul1(y, z)));
  }
}

TEST_CASE("mul2 unit, inverse and associativity") {
  for (auto f : {Q(), F7()}) {
    auto s3 = kS3(f);
    auto auts = s3_automorphisms(s3);
    const auto id = HopfAutomorphism::identity(s3);
    const AutPair2 unit(id, id);
    for (const auto& g : auts)
      for (const auto& d : auts) {
        AutPair2 p(g, d);
        CHECK(mul2(unit, p) == p);
        CHECK(mul2(p, unit) == p);
        AutPair2 printed_inverse(aut_inverse(g),
                                 aut_compose(g, aut_compose(aut_inverse(d), aut_inverse(g))));
        CHECK(mul2(p, printed_inverse) == unit);
        CHECK(mul2(printed_inverse, p) == unit);
        CHECK(inv2(p) == printed_inverse);
      }
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
      AutPair2 x(pick(auts, rng), pick(auts, rng)), y(pick(auts, rng), pick(auts, rng)),
          z(pick(auts, rng), pick(auts, rng));
      CHECK(mul2(mul2(x, y), z) == mul2(x, mul2(y, z)));
    }
  }
}

TEST_CASE("the historical mul2 variant is not a group law with the stated inverse") {
  const auto q = Q();
  auto s3 = kS3(q);
  auto auts = s3_automorphisms(s3);
  const auto id = HopfAutomorphism::identity(s3);
  const AutPair2 unit(id, id);
  int inverse_failures = 0, assoc_failures = 0;
  for (const auto& g : auts)
    for (const auto& d : auts) {
      AutPair2 p(g, d);
      if (!(mul2_printed(p, inv2(p)) == unit)) ++inverse_failures;
    }
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    AutPair2 x(pick(auts, rng), pick(auts, rng)), y(pick(auts, rng), pick(auts, rng)),
        z(pick(auts, rng), pick(auts, rng));
    if (!(mul2_printed(mul2_printed(x, y), z) == mul2_printed(x, mul2_printed(y, z))))
      ++assoc_failures;
  }
  CHECK(inverse_failures > 0);
  CHECK(assoc_failures > 0);
}

TEST_CASE("G = G1 (+) G2 over (k[S3], H4)") {
  for (auto f : {Q(), F7()}) {
    auto s3 = kS3(f);
    auto h4 = sweedler_h4(f);
    auto a1 = s3_automorphisms(s3);
    auto a2 = h4_automorphisms(h4);
    const auto e = unitG(s3, h4);
    CHECK(is_unit(e));
    CHECK(invG(e) == e);
    Rng rng(4);
    for (int t = 0; t < 25; ++t) {
      auto x = random_quadruple(a1, a2, rng);
      auto y = random_quadruple(a1, a2, rng);
      auto z = random_quadruple(a1, a2, rng);
      CHECK(mulG(x, invG(x)) == e);
      CHECK(mulG(invG(x), x) == e);
      CHECK(mulG(e, x) == x);
      CHECK(mulG(mulG(x, y), z) == mulG(x, mulG(y, z)));
    }
  }
}

TEST_CASE("pairs over different algebras are rejected") {
  const auto q = Q();
  auto s3 = kS3(q);
  auto h4 = sweedler_h4(q);
  CHECK_THROWS_AS(AutPair1(HopfAutomorphism::identity(s3), HopfAutomorphism::identity(h4)),
                  AlgebraMismatch);
  AutPair1 p(HopfAutomorphism::identity(s3), HopfAutomorphism::identity(s3));
  AutPair1 r(HopfAutomorphism::identity(h4), HopfAutomorphism::identity(h4));
  CHECK_THROWS_AS(mul1(p, r), AlgebraMismatch);
}

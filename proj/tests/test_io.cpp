#include "doctest.h"

#include "support.hpp"
#include "ydlcat/errors.hpp"
#include "ydlcat/io.hpp"

using namespace testing_support;

TEST_CASE("Hopf algebras survive a round trip") {
  for (auto f : {Q(), F7()}) {
    for (const auto& h : {sweedler_h4(f), kS3(f), group_algebra(GroupTable::cyclic(4), f),
                          dual_hopf(*kS3(f))}) {
      const std::string text = serialize_hopf(*h);
      CHECK(file_kind(text) == "hopf");
      auto back = parse_hopf(text);
      CHECK(*back == *h);
      CHECK(back->labels() == h->labels());
      CHECK(back->name() == h->name());
      CHECK(serialize_hopf(*back) == text);
    }
  }
}

TEST_CASE("modules and quadruples survive a round trip") {
  for (auto f : {Q(), F7()}) {
    auto h4 = sweedler_h4(f);
    auto s3 = kS3(f);
    auto A = h4_automorphisms(h4);
    auto B = s3_automorphisms(s3);
    AutQuadruple c(A[2], A[3], B[1], B[4]);
    for (const auto& m : {regular_module(c), unit_module(h4, s3),
                          half_regular_left(AutQuadruple(A[1], A[2], B[3], B[3]))}) {
      auto back = parse_module(serialize_module(m));
      CHECK(back == m);
    }
    auto q = InvolutionQuadruple::trivial(*h4, *s3);
    q.g2 = s3->basis_vector(3);
    CHECK(parse_quadruple(serialize_quadruple(q)) == q);
  }
}

TEST_CASE("rational entries keep their exact value") {
  const auto f = Q();
  auto h4 = sweedler_h4(f);
  auto m = regular_module(AutQuadruple(sweedler_scaling(h4, Scalar(f, 1, 2)),
                                       sweedler_scaling(h4, Scalar(f, -7, 3)),
                                       HopfAutomorphism::identity(h4),
                                       HopfAutomorphism::identity(h4)));
  const std::string text = serialize_module(m);
  CHECK(text.find("1/2") != std::string::npos);
  CHECK(parse_module(text) == m);
}

TEST_CASE("graded modules survive a round trip") {
  const auto s3 = GroupTable::symmetric3();
  const auto c4 = GroupTable::cyclic(4);
  Rng rng(71);
  for (auto f : {Q(), F7()}) {
    for (int trial = 0; trial < 5; ++trial) {
      GroupQuadruple x{s3, c4, GroupAut::conjugation(s3, trial % 6),
                       GroupAut::conjugation(s3, (trial * 2) % 6), GroupAut::identity(c4),
                       GroupAut::identity(c4)};
      auto m = random_graded_module(f, x, rng, 8);
      const std::string text = serialize_graded(m);
      auto back = parse_graded(text);
      CHECK(back.component() == m.component());
      CHECK(serialize_graded(back) == text);
      CHECK(to_generic(back) == to_generic(m));
    }
  }
}

TEST_CASE("parse errors carry line numbers") {
  const std::string good = serialize_hopf(*group_algebra(GroupTable::cyclic(2), Q()));
  auto expect_line = [](const std::string& text, std::size_t line) {
    try {
      parse_hopf(text);
      FAIL("accepted malformed text");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("garbage\n", 1);
  expect_line("ydlcat 2\nkind hopf\n", 1);
  expect_line("ydlcat 1\nkind module\nfield rational\n", 2);
  expect_line("ydlcat 1\nkind hopf\nfield real\n", 3);
  expect_line("ydlcat 1\nkind hopf\nfield prime 9\n", 3);
  std::string bad_entry = good;
  bad_entry.replace(bad_entry.find("matrix unit 2 1\n0 0 1"), 21, "matrix unit 2 1\n5 0 1");
  std::size_t line = 1;
  for (std::size_t i = 0; i < bad_entry.find("5 0 1"); ++i) line += bad_entry[i] == '\n';
  expect_line(bad_entry, line);
  CHECK_THROWS_AS(parse_hopf(good.substr(0, good.size() / 2)), ParseError);
}

TEST_CASE("well-formed but inconsistent text raises semantic errors") {
  const auto f = Q();
  auto h4 = sweedler_h4(f);
  std::string text = serialize_module(unit_module(h4, h4));
  // The unit module has dim 1; claiming 2 breaks every structure map shape.
  text.replace(text.find("\ndim 1\n"), 7, "\ndim 2\n");
  CHECK_THROWS_AS(parse_module(text), DimensionMismatch);

  std::string aut = serialize_module(unit_module(h4, h4));
  const auto at = aut.find("matrix alpha 4 4\n");
  aut.insert(aut.find("end", at), "2 3 5\n");  // x -> x + 5 gx is not multiplicative
  CHECK_THROWS_AS(parse_module(aut), InvalidAutomorphism);
}

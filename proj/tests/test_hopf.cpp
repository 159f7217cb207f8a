#include "doctest.h"

#include "support.hpp"
#include "ydlcat/errors.hpp"

using namespace ydlcat;
using namespace testing_support;

TEST_CASE("catalog algebras satisfy every Hopf axiom") {
  for (auto f : {Q(), F7()}) {
    CAPTURE(f.to_string());
    std::vector<HopfPtr> catalog = {
        group_algebra(GroupTable::trivial(), f), group_algebra(GroupTable::cyclic(2), f),
        group_algebra(GroupTable::cyclic(4), f), kS3(f), dual_hopf(*kS3(f)),
        dual_hopf(*group_algebra(GroupTable::cyclic(2), f)), sweedler_h4(f),
        dual_hopf(*sweedler_h4(f))};
    for (const auto& h : catalog) {
      CAPTURE(h->name());
      auto rep = validate_hopf(*h);
      CHECK_MESSAGE(rep.all_passed(), rep.to_text());
      CHECK(mat_mul(h->antipode_inv(), h->antipode()).is_identity());
    }
  }
}

TEST_CASE("group algebra structure") {
  const auto q = Q();
  auto c2 = group_algebra(GroupTable::cyclic(2), q);
  CHECK(c2->dim() == 2);
  CHECK(c2->antipode().is_identity());
  auto triv = group_algebra(GroupTable::trivial(), q);
  CHECK(triv->dim() == 1);
  CHECK(triv->mult() == Matrix::identity(q, 1));
  auto s3 = kS3(q);
  CHECK(s3->dim() == 6);
  // S(g) = g^-1: (123) and (132) are swapped.
  CHECK(s3->antipode()(4, 3).is_one());
  CHECK(s3->antipode()(3, 4).is_one());
  CHECK_THROWS_AS(GroupTable("bad", {{0, 1}, {0, 1}}), InvalidGroupTable);
  CHECK_THROWS_AS(GroupTable("bad", {{0, 1}, {1, 1}}), InvalidGroupTable);
}

TEST_CASE("Sweedler algebra relations") {
  const auto q = Q();
  auto h = sweedler_h4(q);
  auto e = [&](std::size_t i) { return h->basis_vector(i); };
  Matrix g = e(1), x = e(2), gx = e(3);
  CHECK(h->multiply(g, g) == e(0));
  CHECK(h->multiply(x, x).is_zero());
  CHECK(h->multiply(x, g) == mat_scale(Scalar(q, -1), gx));
  CHECK(h->multiply(g, x) == gx);

  Matrix s = h->antipode();
  Matrix s2 = mat_pow(s, 2);
  CHECK_FALSE(s2.is_identity());
  CHECK(mat_mul(s2, x) == mat_scale(Scalar(q, -1), x));
  CHECK(mat_pow(s, 4).is_identity());
  // S^-1(x) = g x
  CHECK(mat_mul(h->antipode_inv(), x) == gx);

  CHECK_THROWS_AS(sweedler_h4(FieldCtx::prime(2)), UnsupportedField);
}

TEST_CASE("corrupted antipode is caught with a witness") {
  const auto q = Q();
  auto h = sweedler_h4(q);
  Matrix bad = h->antipode();
  bad(0, 2) = Scalar(q, 1);
  HopfAlgebra broken("broken", q, h->labels(), h->mult(), h->unit(), h->comult(),
                     h->counit(), bad);
  auto rep = validate_hopf(broken);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.passed("antipode_left"));
  CHECK(rep.at("antipode_left").witness.has_value());
  CHECK(rep.passed("mult_associative"));
  CHECK(rep.passed("comult_coassociative"));
}

TEST_CASE("constructor rejects malformed shapes") {
  const auto q = Q();
  auto h = sweedler_h4(q);
  CHECK_THROWS_AS(HopfAlgebra("x", q, {}, h->mult(), h->unit(), h->comult(), h->counit(),
                              Matrix::identity(q, 3)),
                  DimensionMismatch);
  CHECK_THROWS_AS(HopfAlgebra("x", q, {}, h->mult(), h->unit(), h->comult(),
                              Matrix(FieldCtx::prime(7), 1, 4), h->antipode()),
                  FieldMismatch);
}

TEST_CASE("double dual is the original algebra") {
  for (auto f : {Q(), F7()}) {
    for (const auto& h : {kS3(f), sweedler_h4(f)}) {
      auto dd = dual_hopf(*dual_hopf(*h));
      CHECK(*dd == *h);
    }
    auto t = group_algebra(GroupTable::trivial(), f);
    CHECK(*dual_hopf(*t) == *t);
  }
}

TEST_CASE("automorphism recognition") {
  const auto q = Q();
  auto s3 = kS3(q);
  CHECK(is_automorphism(*s3, s3->identity()).first);
  for (std::size_t t = 0; t < 6; ++t) {
    Matrix m = lift_group_aut(s3, GroupAut::conjugation(GroupTable::symmetric3(), t)).matrix();
    CHECK(is_automorphism(*s3, m).first);
  }
  auto h4 = sweedler_h4(q);
  Matrix a = h4->identity();
  a(2, 2) = Scalar(q, 5, 3);
  a(3, 3) = Scalar(q, 5, 3);
  CHECK(is_automorphism(*h4, a).first);
  a(2, 2) = Scalar(q, 0);
  a(3, 3) = Scalar(q, 0);
  auto [ok, rep] = is_automorphism(*h4, a);
  CHECK_FALSE(ok);
  CHECK_FALSE(rep.passed("invertible"));
  // x -> x + g is invertible but does not respect the coalgebra structure.
  Matrix b = h4->identity();
  b(1, 2) = Scalar(q, 1);
  auto [ok2, rep2] = is_automorphism(*h4, b);
  CHECK_FALSE(ok2);
  CHECK(rep2.passed("invertible"));
  CHECK_THROWS_AS(HopfAutomorphism::create(h4, b), InvalidAutomorphism);
  CHECK_THROWS_AS(is_automorphism(*h4, Matrix::identity(q, 3)), DimensionMismatch);
}

TEST_CASE("automorphism composition") {
  const auto q = Q();
  auto h4 = sweedler_h4(q);
  for (int l = 1; l <= 4; ++l)
    for (int m = -2; m <= 3; ++m) {
      if (m == 0) continue;
      auto al = sweedler_scaling(h4, Scalar(q, l));
      auto am = sweedler_scaling(h4, Scalar(q, m));
      CHECK(aut_compose(al, am) == sweedler_scaling(h4, Scalar(q, l * m)));
      CHECK(aut_compose(al, aut_inverse(al)) == HopfAutomorphism::identity(h4));
      CHECK(is_automorphism(*h4, aut_compose(al, aut_inverse(am)).matrix()).first);
    }

  auto s3 = kS3(q);
  const auto g = GroupTable::symmetric3();
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t) {
      auto cs = lift_group_aut(s3, GroupAut::conjugation(g, s));
      auto ct = lift_group_aut(s3, GroupAut::conjugation(g, t));
      // Permutation oracle: conj_s o conj_t = conj_{st}.
      CHECK(aut_compose(cs, ct) == lift_group_aut(s3, GroupAut::conjugation(g, g.mul(s, t))));
      CHECK(is_automorphism(*s3, aut_inverse(cs).matrix()).first);
    }

  CHECK_THROWS_AS(aut_compose(HopfAutomorphism::identity(h4), HopfAutomorphism::identity(s3)),
                  AlgebraMismatch);
}

#include "doctest.h"

#include <algorithm>
#include <array>

#include "support.hpp"
#include "ydlcat/errors.hpp"
#include "ydlcat/involution.hpp"
#include "ydlcat/tcat.hpp"

using namespace testing_support;

namespace {

InvolutionQuadruple h4_sign_quadruple(const HopfPtr& h4, const HopfPtr& h2) {
  Matrix f1(h4->field(), 1, 4);
  f1.set(0, 0, 1);
  f1.set(0, 1, -1);
  return {f1, h4->unit(), h2->counit(), h2->unit()};
}

// The two-dimensional irreducible representation of S3 on the sum-zero
// vectors of k^3, basis e0 - e1, e1 - e2, indexed like GroupTable::symmetric3.
std::vector<Matrix> s3_standard_rep(const FieldCtx& f) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<Matrix> out;
  for (const auto& a : perms) {
    Matrix m(f, 2, 2);
    for (int j = 0; j < 2; ++j) {
      std::array<int, 3> v{0, 0, 0};
      v[a[j]] += 1;
      v[a[j + 1]] -= 1;
      m.set(0, j, v[0]);
      m.set(1, j, -v[2]);
    }
    out.push_back(m);
  }
  return out;
}

// k^2 with the standard representation on the left, trivially graded and
// with the trivial right structure; a module in the unit component.
YdlModule s3_standard_module(const HopfPtr& s3) {
  const auto& f = s3->field();
  auto rep = s3_standard_rep(f);
  Matrix L(f, 2, 12);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) L(r, a * 2 + c) = rep[a](r, c);
  Matrix I = Matrix::identity(f, 2);
  return YdlModule(unitG(s3, s3), 2, L, kron(I, s3->counit()), kron(s3->unit(), I),
                   kron(I, s3->unit()));
}

}  // namespace

TEST_CASE("the unit quadruple on the unit component gives identity functors") {
  for (auto f : {Q(), F7()}) {
    auto h4 = sweedler_h4(f);
    auto s3 = kS3(f);
    auto e = unitG(h4, s3);
    auto q = InvolutionQuadruple::trivial(*h4, *s3);
    for (const auto& m : {unit_module(h4, s3), half_regular_left(e), half_regular_right(e)}) {
      CHECK(functor_F(m, q) == m);
      CHECK(functor_G(m, q, e) == m);
    }
  }
}

TEST_CASE("counit quadruple on (a, a, g, g): F precomposes actions and keeps coactions") {
  for (auto f : {Q(), F7()}) {
    auto h4 = sweedler_h4(f);
    auto s3 = kS3(f);
    auto A = h4_automorphisms(h4);
    auto B = s3_automorphisms(s3);
    auto q = InvolutionQuadruple::trivial(*h4, *s3);
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j : {0, 3, 4}) {
        AutQuadruple c(A[i], A[i], B[j], B[j]);
        for (const auto& m : {half_regular_left(c), half_regular_right(c),
                              trivial_module(2, q, c)}) {
          auto fm = functor_F(m, q);
          CHECK(is_unit(fm.component()));
          const std::size_t d = m.dim();
          CHECK(fm.left_action() ==
                mat_mul(m.left_action(), kron(c.beta().inverse_matrix(), Matrix::identity(f, d))));
          CHECK(fm.right_action() ==
                mat_mul(m.right_action(), kron(Matrix::identity(f, d), c.gamma().inverse_matrix())));
          CHECK(fm.left_coaction() == m.left_coaction());
          CHECK(fm.right_coaction() == m.right_coaction());
          auto rep = check_iso_pair(m, q);
          CHECK_MESSAGE(rep.all_passed(), rep.to_text());
        }
      }
  }
}

TEST_CASE("F of a trivial module is the trivial module of the unit component") {
  const auto f = Q();
  auto s3 = kS3(f);
  const auto g = GroupTable::symmetric3();
  auto id = HopfAutomorphism::identity(s3);
  auto B = s3_automorphisms(s3);
  for (std::size_t t : {1, 3}) {
    InvolutionQuadruple iq{s3->counit(), s3->basis_vector(t), s3->counit(), s3->basis_vector(4)};
    auto conj_t = lift_group_aut(s3, GroupAut::conjugation(g, t));
    auto conj_uinv = lift_group_aut(s3, GroupAut::conjugation(g, g.inverse(4)));
    AutQuadruple target(conj_t, id, B[2], aut_compose(conj_uinv, B[2]));
    auto v = trivial_module(3, iq, target);
    CHECK(functor_F(v, iq) ==
          trivial_module(3, InvolutionQuadruple::trivial(*s3, *s3), unitG(s3, s3)));
    CHECK(functor_G(unit_module(s3, s3), iq, target) == trivial_module(1, iq, target));
  }
}

TEST_CASE("Sweedler quadruple (sign, 1, counit, 1) round-trips") {
  for (auto f : {Q(), F7()}) {
    auto h4 = sweedler_h4(f);
    auto A = h4_automorphisms(h4);
    auto q = h4_sign_quadruple(h4, h4);
    for (int mu : {1, 2, 3}) {
      auto beta = sweedler_scaling(h4, Scalar(f, mu));
      auto alpha = sweedler_scaling(h4, Scalar(f, -mu));
      for (std::size_t j : {0, 2}) {
        AutQuadruple c(alpha, beta, A[j], A[j]);
        REQUIRE(check_involution_quadruple(q, c).all_passed());
        auto m = half_regular_left(c);
        auto rep = check_iso_pair(m, q);
        CHECK_MESSAGE(rep.all_passed(), rep.to_text());
        auto fm = functor_F(m, q);
        CHECK(check_module(fm).all_passed());
        CHECK(functor_G(fm, q, c) == m);

        auto big = regular_module(c);
        auto fbig = functor_F(big, q);
        CHECK(check_module(fbig).all_passed());
        CHECK(functor_G(fbig, q, c) == big);
        CHECK(functor_F(functor_G(fbig, q, c), q) == fbig);
      }
    }
  }
}

TEST_CASE("G on the standard representation of S3") {
  for (auto f : {Q(), F7()}) {
    auto s3 = kS3(f);
    const auto g = GroupTable::symmetric3();
    auto id = HopfAutomorphism::identity(s3);
    auto n = s3_standard_module(s3);
    REQUIRE(check_module(n).all_passed());
    for (std::size_t t = 0; t < 6; ++t)
      for (std::size_t u : {0, 2, 3}) {
        InvolutionQuadruple iq{s3->counit(), s3->basis_vector(t), s3->counit(),
                               s3->basis_vector(u)};
        auto conj_t = lift_group_aut(s3, GroupAut::conjugation(g, t));
        auto conj_uinv = lift_group_aut(s3, GroupAut::conjugation(g, g.inverse(u)));
        AutQuadruple target(conj_t, id, id, conj_uinv);
        auto gn = functor_G(n, iq, target);
        CHECK(gn.component() == target);
        auto rep = check_module(gn);
        CHECK_MESSAGE(rep.all_passed(), rep.to_text());
        CHECK(functor_F(gn, iq) == n);
        CHECK(check_iso_pair(gn, iq).all_passed());
      }
  }
}

TEST_CASE("morphism transport is a bijection on endomorphisms") {
  const auto f = Q();
  auto s3 = kS3(f);
  const auto g = GroupTable::symmetric3();
  auto id = HopfAutomorphism::identity(s3);
  auto n = direct_sum(s3_standard_module(s3), unit_module(s3, s3));
  InvolutionQuadruple iq{s3->counit(), s3->basis_vector(3), s3->counit(), s3->basis_vector(1)};
  AutQuadruple target(lift_group_aut(s3, GroupAut::conjugation(g, 3)), id, id,
                      lift_group_aut(s3, GroupAut::conjugation(g, g.inverse(1))));
  auto gn = functor_G(n, iq, target);
  auto ends_n = hom_space(n, n);
  auto ends_gn = hom_space(gn, gn);
  // Schur: End(V (+) k) is two-dimensional.
  CHECK(ends_n.size() == 2);
  CHECK(ends_gn.size() == 2);
  for (const auto& e : ends_n) CHECK(is_ydl_morphism(e, gn, gn).first);
  for (const auto& e : ends_gn) CHECK(is_ydl_morphism(e, n, n).first);
  // A map mixing the summands is a morphism on neither side.
  Matrix mix = Matrix::identity(f, 3);
  mix.set(2, 0, 1);
  CHECK_FALSE(is_ydl_morphism(mix, n, n).first);
  CHECK_FALSE(is_ydl_morphism(mix, gn, gn).first);
}

TEST_CASE("the left coaction of F must use g1^-1") {
  const auto f = Q();
  auto s3 = kS3(f);
  const auto g = GroupTable::symmetric3();
  auto id = HopfAutomorphism::identity(s3);
  auto n = s3_standard_module(s3);
  const std::size_t t = 3;  // an element of order three, so g1 != g1^-1
  InvolutionQuadruple iq{s3->counit(), s3->basis_vector(t), s3->counit(), s3->unit()};
  AutQuadruple target(lift_group_aut(s3, GroupAut::conjugation(g, t)), id, id, id);
  auto gn = functor_G(n, iq, target);
  auto fgn = functor_F(gn, iq);
  CHECK(fgn == n);
  auto alt = fgn.with_left_coaction(
      mat_mul(kron(s3->left_mult(s3->basis_vector(t)), Matrix::identity(f, 2)),
              gn.left_coaction()));
  CHECK_FALSE(alt == n);
  auto rep = check_module(alt);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.passed("left_yd_compat"));
}

TEST_CASE("functor preconditions") {
  const auto f = Q();
  auto h4 = sweedler_h4(f);
  auto A = h4_automorphisms(h4);
  auto q = InvolutionQuadruple::trivial(*h4, *h4);
  AutQuadruple c(A[2], A[3], A[0], A[0]);
  auto m = half_regular_left(c);
  CHECK_THROWS_AS(functor_F(m, q), InvalidQuadruple);
  CHECK_THROWS_AS(functor_G(m, q, c), ComponentMismatch);
  CHECK_THROWS_AS(functor_G(unit_module(h4, h4), q, c), InvalidQuadruple);
}

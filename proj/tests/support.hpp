// Shared fixtures for the unit tests: catalog algebras, automorphism
// samplers and seeded random data.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "ydlcat/autgroup.hpp"
#include "ydlcat/errors.hpp"
#include "ydlcat/group.hpp"
#include "ydlcat/hopf.hpp"
#include "ydlcat/matrix.hpp"
#include "ydlcat/network.hpp"
#include "ydlcat/ydl.hpp"

namespace testing_support {

using namespace ydlcat;

inline FieldCtx Q() { return FieldCtx::rational(); }
inline FieldCtx F7() { return FieldCtx::prime(7); }

using Rng = std::mt19937_64;

inline Scalar random_scalar(const FieldCtx& f, Rng& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  if (!f.is_rational()) return Scalar(f, num(rng));
  return Scalar(f, num(rng), den(rng));
}

inline Scalar random_nonzero(const FieldCtx& f, Rng& rng, int range = 3) {
  for (;;) {
    Scalar s = random_scalar(f, rng, range);
    if (!s.is_zero()) return s;
  }
}

inline Matrix random_matrix(const FieldCtx& f, std::size_t r, std::size_t c, Rng& rng,
                            int range = 3) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng, range);
  return m;
}

inline Matrix random_invertible(const FieldCtx& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    try {
      (void)mat_inv(m);
      return m;
    } catch (const SingularMatrix&) {
    }
  }
}

inline HopfPtr kS3(const FieldCtx& f) { return group_algebra(GroupTable::symmetric3(), f); }

/// The inner automorphisms of k[S3] (all of Aut(S3)).
inline std::vector<HopfAutomorphism> s3_automorphisms(const HopfPtr& h) {
  const auto g = GroupTable::symmetric3();
  std::vector<HopfAutomorphism> out;
  for (std::size_t t = 0; t < g.order(); ++t)
    out.push_back(lift_group_aut(h, GroupAut::conjugation(g, t)));
  return out;
}

inline std::vector<HopfAutomorphism> h4_automorphisms(const HopfPtr& h) {
  std::vector<HopfAutomorphism> out;
  const auto& f = h->field();
  for (auto l : {Scalar(f, 1), Scalar(f, -1), Scalar(f, 2), Scalar(f, 3), Scalar(f, 1, 2)})
    out.push_back(sweedler_scaling(h, l));
  return out;
}

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

inline AutQuadruple random_quadruple(const std::vector<HopfAutomorphism>& a1,
                                     const std::vector<HopfAutomorphism>& a2, Rng& rng) {
  return AutQuadruple(pick(a1, rng), pick(a1, rng), pick(a2, rng), pick(a2, rng));
}

/// M = H1 with h > a = alpha(h1) a beta(S h2), rho1 = comultiplication,
/// and the trivial H2 structure. Needs gamma == delta.
inline YdlModule half_regular_left(const AutQuadruple& c) {
  const auto& H1 = *c.h1();
  const auto& H2 = *c.h2();
  const auto& f = H1.field();
  const std::size_t n1 = H1.dim(), d = n1;
  Matrix L = LegNetwork(f, {n1, n1})
                 .act(0, 1, H1.comult(), {n1, n1})
                 .permute({0, 2, 1})
                 .act(0, c.alpha().matrix())
                 .act(2, mat_mul(c.beta().matrix(), H1.antipode()))
                 .act(0, 2, H1.mult(), {n1})
                 .act(0, 2, H1.mult(), {n1})
                 .matrix();
  Matrix R = kron(Matrix::identity(f, d), H2.counit());
  Matrix C2 = kron(Matrix::identity(f, d), H2.unit());
  return YdlModule(c, d, std::move(L), std::move(R), H1.comult(), std::move(C2));
}

/// M = H2 with a < h = gamma(S h1) a delta(h2), rho2 = comultiplication,
/// and the trivial H1 structure. Needs alpha == beta.
inline YdlModule half_regular_right(const AutQuadruple& c) {
  const auto& H1 = *c.h1();
  const auto& H2 = *c.h2();
  const auto& f = H1.field();
  const std::size_t n2 = H2.dim(), d = n2;
  Matrix R = LegNetwork(f, {n2, n2})
                 .act(1, 1, H2.comult(), {n2, n2})
                 .permute({1, 0, 2})
                 .act(0, mat_mul(c.gamma().matrix(), H2.antipode()))
                 .act(2, c.delta().matrix())
                 .act(0, 2, H2.mult(), {n2})
                 .act(0, 2, H2.mult(), {n2})
                 .matrix();
  Matrix L = kron(H1.counit(), Matrix::identity(f, d));
  Matrix C1 = kron(H1.unit(), Matrix::identity(f, d));
  return YdlModule(c, d, std::move(L), std::move(R), std::move(C1), H2.comult());
}

// Small modules over (H1, H2) in a spread of components. Every one has
// dimension at most 4.
struct Zoo {
  HopfPtr h1, h2;
  std::vector<HopfAutomorphism> a1, a2;
  std::vector<YdlModule> modules;
};

inline Zoo h4_zoo(const FieldCtx& f) {
  Zoo z;
  z.h1 = sweedler_h4(f);
  z.h2 = sweedler_h4(f);
  z.a1 = h4_automorphisms(z.h1);
  z.a2 = h4_automorphisms(z.h2);
  const auto& A = z.a1;
  const auto& B = z.a2;
  auto q = InvolutionQuadruple::trivial(*z.h1, *z.h2);
  z.modules.push_back(unit_module(z.h1, z.h2));
  z.modules.push_back(trivial_module(2, q, AutQuadruple(A[2], A[2], B[1], B[1])));
  z.modules.push_back(half_regular_left(AutQuadruple(A[2], A[1], B[3], B[3])));
  z.modules.push_back(half_regular_left(AutQuadruple(A[0], A[3], B[0], B[0])));
  z.modules.push_back(half_regular_right(AutQuadruple(A[4], A[4], B[2], B[1])));
  z.modules.push_back(half_regular_right(AutQuadruple(A[0], A[0], B[3], B[4])));
  Matrix f1(f, 1, 4);
  f1.set(0, 0, 1);
  f1.set(0, 1, -1);
  InvolutionQuadruple chi{f1, z.h1->unit(), z.h2->counit(), z.h2->unit()};
  z.modules.push_back(trivial_module(2, chi, AutQuadruple(A[1], A[0], B[2], B[2])));
  return z;
}

inline Zoo s3_h4_zoo(const FieldCtx& f) {
  Zoo z;
  z.h1 = kS3(f);
  z.h2 = sweedler_h4(f);
  z.a1 = s3_automorphisms(z.h1);
  z.a2 = h4_automorphisms(z.h2);
  const auto& A = z.a1;
  const auto& B = z.a2;
  const auto g = GroupTable::symmetric3();
  z.modules.push_back(unit_module(z.h1, z.h2));
  z.modules.push_back(half_regular_right(AutQuadruple(A[3], A[3], B[2], B[3])));
  for (std::size_t t : {1, 3}) {
    InvolutionQuadruple iq{z.h1->counit(), z.h1->basis_vector(t), z.h2->counit(),
                           z.h2->unit()};
    auto conj_t = lift_group_aut(z.h1, GroupAut::conjugation(g, t));
    z.modules.push_back(trivial_module(2, iq, AutQuadruple(conj_t, A[0], B[1], B[1])));
  }
  return z;
}

inline std::vector<Zoo> all_zoos() {
  std::vector<Zoo> out;
  for (auto f : {Q(), F7()}) {
    out.push_back(h4_zoo(f));
    out.push_back(s3_h4_zoo(f));
  }
  return out;
}

}  // namespace testing_support

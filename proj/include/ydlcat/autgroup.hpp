#pragma once

#include <string>

#include "ydlcat/hopf.hpp"

namespace ydlcat {

/// An element (alpha, beta) of the group G1 of automorphism pairs of H1.
struct AutPair1 {
  HopfAutomorphism alpha;
  HopfAutomorphism beta;

  /// Throws AlgebraMismatch unless both live on the same algebra.
  AutPair1(HopfAutomorphism a, HopfAutomorphism b);
  const HopfPtr& algebra() const { return alpha.algebra(); }
  friend bool operator==(const AutPair1&, const AutPair1&) = default;
};

/// An element (gamma, delta) of the group G2 of automorphism pairs of H2.
struct AutPair2 {
  HopfAutomorphism gamma;
  HopfAutomorphism delta;

  AutPair2(HopfAutomorphism g, HopfAutomorphism d);
  const HopfPtr& algebra() const { return gamma.algebra(); }
  friend bool operator==(const AutPair2&, const AutPair2&) = default;
};

/// (alpha, beta, gamma, delta) in G = G1 (+) G2. Equality is entrywise on
/// the four matrices.
struct AutQuadruple {
  AutPair1 pair1;
  AutPair2 pair2;

  AutQuadruple(AutPair1 p1, AutPair2 p2) : pair1(std::move(p1)), pair2(std::move(p2)) {}
  AutQuadruple(HopfAutomorphism a, HopfAutomorphism b, HopfAutomorphism g,
               HopfAutomorphism d)
      : pair1(std::move(a), std::move(b)), pair2(std::move(g), std::move(d)) {}

  const HopfAutomorphism& alpha() const { return pair1.alpha; }
  const HopfAutomorphism& beta() const { return pair1.beta; }
  const HopfAutomorphism& gamma() const { return pair2.gamma; }
  const HopfAutomorphism& delta() const { return pair2.delta; }
  const HopfPtr& h1() const { return pair1.algebra(); }
  const HopfPtr& h2() const { return pair2.algebra(); }

  friend bool operator==(const AutQuadruple&, const AutQuadruple&) = default;
};

/// (a1, b1) * (a2, b2) = (a2 a1, a2 b1 a2^-1 b2)
AutPair1 mul1(const AutPair1& p, const AutPair1& q);
/// (a, b)^-1 = (a^-1, a^-1 b^-1 a)
AutPair1 inv1(const AutPair1& p);

/// (g1, d1) * (g2, d2) = (g1 g2, d2 g2^-1 d1 g2)
AutPair2 mul2(const AutPair2& p, const AutPair2& q);
/// (g, d)^-1 = (g^-1, g d^-1 g^-1)
AutPair2 inv2(const AutPair2& p);
/// The historical variant (g1 g2, d2 g2^-1 d1 d2). It is not the law that
/// tensor products realize; kept so tests can demonstrate the difference.
AutPair2 mul2_printed(const AutPair2& p, const AutPair2& q);

AutQuadruple mulG(const AutQuadruple& x, const AutQuadruple& y);
AutQuadruple invG(const AutQuadruple& x);
AutQuadruple unitG(const HopfPtr& h1, const HopfPtr& h2);
bool is_unit(const AutQuadruple& x);

std::string to_string(const AutQuadruple& x);

}  // namespace ydlcat

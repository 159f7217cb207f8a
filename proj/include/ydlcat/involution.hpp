#pragma once

#include "ydlcat/ydl.hpp"

namespace ydlcat {

/// Moves a module M in component (a, b, g, d) to the unit component using a
/// quadruple q = (f1, g1, f2, g2) in involution for that component:
///   h -> m  = f1(b^-1 S(h1)) b^-1(h2) > m
///   rho1(m) = g1^-1 m_(-1) (x) m_(0)
///   m <- h  = m < g^-1(h1) f2(g^-1 S(h2))
///   rho2(m) = m_(0) (x) m_(1) g2^-1
/// Throws InvalidQuadruple when q is not valid for the component of m.
YdlModule functor_F(const YdlModule& m, const InvolutionQuadruple& q);

/// The inverse direction, from the unit component to `target`:
///   h > n   = f1(h1) b(h2) -> n
///   rho1(n) = g1 n_(-1) (x) n_(0)
///   n < h   = n <- g(h1) f2(h2)
///   rho2(n) = n_(0) (x) n_(1) g2
/// Throws ComponentMismatch when n is not in the unit component and
/// InvalidQuadruple when q is not valid for target.
YdlModule functor_G(const YdlModule& n, const InvolutionQuadruple& q, const AutQuadruple& target);

/// Round trips G(F(M)) = M and F(G(F(M))) = F(M) on structure maps, the
/// axioms of F(M), and transport of morphisms: End(M) and End(F(M)) are the
/// same space of matrices, and a pseudo-random element of each is a
/// morphism on the other side.
ValidationReport check_iso_pair(const YdlModule& m, const InvolutionQuadruple& q);

}  // namespace ydlcat

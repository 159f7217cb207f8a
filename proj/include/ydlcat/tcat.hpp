#pragma once

#include <utility>

#include "ydlcat/ydl.hpp"

namespace ydlcat {

/// M (x) N with the diagonal left action, the left coaction
///   m_(-1) n_(-1) twisted to a2(m_(-1)) a2 b1 a2^-1(n_(-1)),
/// the right action m < g2(h1) (x) n < g2^-1 d1 g2(h2), the right coaction
/// m_(1) n_(1), and component mulG(component(M), component(N)).
/// Throws AlgebraMismatch when the algebra pairs differ.
YdlModule tensor_module(const YdlModule& m, const YdlModule& n);

/// The conjugate ^x N: same space, with x = (a1, b1, g1, d1) and N in
/// (a2, b2, g2, d2),
///   h -> n    = b1^-1 a1(h) > n
///   rho1'(n)  = a1^-1 a2 b1 a2^-1(n_(-1)) (x) n_(0)
///   n <- h    = n < g2^-1 d1 g2 g1^-1(h)
///   rho2'(n)  = n_(0) (x) g1 d1^-1(n_(1))
/// in component x * component(N) * x^-1.
YdlModule conjugate_module(const AutQuadruple& x, const YdlModule& n);

/// c_{M,N}: M (x) N -> ^M N (x) M, where ^M N is N conjugated by the
/// component of M, together with its explicit inverse.
struct BraidingMap {
  YdlModule source;  // M (x) N
  YdlModule target;  // ^M N (x) M
  Matrix map;
  Matrix inverse;
};

/// c(m (x) n) = b1^-1(m_(-1)) > n_(0) (x) m_(0) < d1^-1(n_(1)), where
/// (a1, b1, g1, d1) is the component of M.
Matrix braiding_matrix(const YdlModule& m, const YdlModule& n);
/// c^-1(n (x) m) = m_(0) < d1^-1 S^-1(n_(1)) (x) b1^-1 S^-1(m_(-1)) > n_(0).
Matrix braiding_inverse_matrix(const YdlModule& m, const YdlModule& n);
BraidingMap braiding(const YdlModule& m, const YdlModule& n);

/// Both inverse identities, the morphism property of c and c^-1, and the
/// component of the target.
ValidationReport check_braiding(const BraidingMap& c);

/// c_{M(x)N,P} = (c_{M,^N P} (x) id_N)(id_M (x) c_{N,P}) and
/// c_{M,N(x)P} = (id_{^M N} (x) c_{M,P})(c_{M,N} (x) id_P), plus equality
/// of the objects each side lands in.
ValidationReport check_hexagons(const YdlModule& m, const YdlModule& n, const YdlModule& p);

/// (g (x) f) o c_{M,N} = c_{M',N'} o (f (x) g) for morphisms f: M -> M' and
/// g: N -> N'. Throws NotAMorphism when f or g is not one.
bool check_braiding_naturality(const Matrix& f, const Matrix& g, const YdlModule& m,
                               const YdlModule& m2, const YdlModule& n, const YdlModule& n2);

/// c_{^P M, ^P N} = c_{M,N}, conjugating by the component of P.
ValidationReport check_phi_compat(const YdlModule& p, const YdlModule& m, const YdlModule& n);

enum class DualSide { Left, Right };

/// A dual object with evaluation and coevaluation.
///   Left:  ev: M* (x) M -> k,  coev: k -> M (x) M*
///   Right: ev: M (x) *M -> k,  coev: k -> *M (x) M
struct DualityData {
  DualSide side;
  YdlModule dual;
  Matrix ev;
  Matrix coev;
};

/// M* = Hom(M, k) in component invG(component(M)), with
///   (h > f)(m)  = f(S(h) > m)
///   rho1(f)     = a^-1 b^-1 S^-1(m_(-1)) f(m_(0))
///   (f < h)(m)  = f(m < d^-1 g^-1 S^-1(h))
///   rho2(f)     = f(m_(0)) S(m_(1))
DualityData left_dual(const YdlModule& m);
/// *M, the same displays with S and S^-1 exchanged.
DualityData right_dual(const YdlModule& m);

/// Axioms of the dual, its component, both snake identities and the
/// morphism property of ev and coev. Also reports (informationally)
/// whether the dual satisfies the axioms under the alternative component
/// whose delta slot is g d g^-1 instead of g d^-1 g^-1.
ValidationReport check_duality(const YdlModule& m, const DualityData& d);

}  // namespace ydlcat

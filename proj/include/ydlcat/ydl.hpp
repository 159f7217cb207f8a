#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ydlcat/autgroup.hpp"
#include "ydlcat/hopf.hpp"
#include "ydlcat/report.hpp"

namespace ydlcat {

/// A finite-dimensional Yetter-Drinfeld-Long bimodule over (H1, H2) in the
/// component (alpha, beta, gamma, delta). Structure maps, with d = dim:
///   left_action    d x (n1 d)   h (x) m -> h > m
///   right_action   d x (d n2)   m (x) h -> m < h
///   left_coaction  (n1 d) x d   m -> m_(-1) (x) m_(0)
///   right_coaction (d n2) x d   m -> m_(0) (x) m_(1)
/// The constructor checks shapes and fields only; the axiom checkers below
/// decide whether the data really is a module.
class YdlModule {
 public:
  YdlModule(AutQuadruple component, std::size_t dim, Matrix left_action, Matrix right_action,
            Matrix left_coaction, Matrix right_coaction);

  const HopfPtr& h1() const { return component_.h1(); }
  const HopfPtr& h2() const { return component_.h2(); }
  const FieldCtx& field() const { return h1()->field(); }
  const AutQuadruple& component() const { return component_; }
  std::size_t dim() const { return dim_; }

  const Matrix& left_action() const { return left_action_; }
  const Matrix& right_action() const { return right_action_; }
  const Matrix& left_coaction() const { return left_coaction_; }
  const Matrix& right_coaction() const { return right_coaction_; }

  YdlModule with_component(AutQuadruple c) const;
  YdlModule with_left_action(Matrix m) const;
  YdlModule with_right_action(Matrix m) const;
  YdlModule with_left_coaction(Matrix m) const;
  YdlModule with_right_coaction(Matrix m) const;

  /// Same component and entrywise equal structure maps.
  friend bool operator==(const YdlModule& a, const YdlModule& b);

 private:
  AutQuadruple component_;
  std::size_t dim_;
  Matrix left_action_, right_action_, left_coaction_, right_coaction_;
};

/// Characters f1, f2 (row vectors) and grouplikes g1, g2 (column vectors)
/// that twist a component into the unit component.
struct InvolutionQuadruple {
  Matrix f1;  // 1 x n1
  Matrix g1;  // n1 x 1
  Matrix f2;  // 1 x n2
  Matrix g2;  // n2 x 1

  /// (counit1, 1, counit2, 1).
  static InvolutionQuadruple trivial(const HopfAlgebra& h1, const HopfAlgebra& h2);
  friend bool operator==(const InvolutionQuadruple&, const InvolutionQuadruple&) = default;
};

/// Unit, associativity and commutation of both actions; counit,
/// coassociativity and commutation of both coactions.
ValidationReport check_bimodule_bicomodule(const YdlModule& m);

/// The four compatibilities between actions and coactions:
///   left_yd_compat        a(h1) m_(-1) (x) h2 > m_(0)
///                           = (h1 > m)_(-1) b(h2) (x) (h1 > m)_(0)
///   left_action_colinear  rho2(h > m) = h > m_(0) (x) m_(1)
///   right_yd_compat       m_(0) < h1 (x) m_(1) d(h2)
///                           = (m < h2)_(0) (x) g(h1) (m < h2)_(1)
///   right_action_colinear rho1(m < h) = m_(-1) (x) m_(0) < h
ValidationReport check_ydl_axioms(const YdlModule& m);

/// The closed forms
///   left_yd_closed   rho1(h > m) = a(h1) m_(-1) b(S h3) (x) h2 > m_(0)
///   right_yd_closed  rho2(m < h) = m_(0) < h2 (x) g(S h1) m_(1) d(h3)
/// together with flags asserting that each closed form holds exactly when
/// the matching compatibility of check_ydl_axioms holds.
ValidationReport check_equivalent_forms(const YdlModule& m);

/// Bimodule/bicomodule checks, the four compatibilities and the closed
/// forms in one report.
ValidationReport check_module(const YdlModule& m);

/// Characters, grouplikes and the twist identities
///   alpha(h) = g1 f1(h1) beta(h2) f1(S h3) g1^-1
///   delta(h) = g2^-1 f2(S h1) gamma(h2) f2(h3) g2.
ValidationReport check_involution_quadruple(const InvolutionQuadruple& q,
                                            const AutQuadruple& target);

/// V = k^dim with h > v = f1(h) v, rho1(v) = g1 (x) v, v < h = f2(h) v,
/// rho2(v) = v (x) g2. Throws InvalidQuadruple unless q is valid for target.
YdlModule trivial_module(std::size_t dim, const InvolutionQuadruple& q,
                         const AutQuadruple& target);

/// The monoidal unit k in the unit component.
YdlModule unit_module(const HopfPtr& h1, const HopfPtr& h2);

/// H1 (x) H2 with h > (a (x) b) = alpha(h1) a beta(S h2) (x) b, rho1 = D on
/// the first factor, (a (x) b) < h = a (x) gamma(S h1) b delta(h2), rho2 = D
/// on the second factor. A module in any component.
YdlModule regular_module(const AutQuadruple& component);

/// Block-diagonal sum. Throws ComponentMismatch across components.
YdlModule direct_sum(const YdlModule& a, const YdlModule& b);

/// f: m -> n (a dim(n) x dim(m) matrix) commutes with both actions and both
/// coactions. Throws ComponentMismatch when m and n live in different
/// components.
std::pair<bool, ValidationReport> is_ydl_morphism(const Matrix& f, const YdlModule& m,
                                                  const YdlModule& n);

/// A basis of the space of morphisms m -> n, one dim(n) x dim(m) matrix per
/// basis element, obtained by solving the linear intertwining equations.
std::vector<Matrix> hom_space(const YdlModule& m, const YdlModule& n);

}  // namespace ydlcat

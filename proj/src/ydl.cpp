#include "ydlcat/ydl.hpp"

#include "ydlcat/errors.hpp"
#include "ydlcat/network.hpp"

namespace ydlcat {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what,
                   const FieldCtx& field) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
  if (!(m.field() == field)) throw FieldMismatch(std::string(what) + " has a different field");
}

}  // namespace

YdlModule::YdlModule(AutQuadruple component, std::size_t dim, Matrix left_action,
                     Matrix right_action, Matrix left_coaction, Matrix right_coaction)
    : component_(std::move(component)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)),
      left_coaction_(std::move(left_coaction)),
      right_coaction_(std::move(right_coaction)) {
  if (!(h1()->field() == h2()->field())) throw FieldMismatch("H1 and H2 over different fields");
  const std::size_t n1 = h1()->dim(), n2 = h2()->dim();
  require_shape(left_action_, dim_, n1 * dim_, "left action", field());
  require_shape(right_action_, dim_, dim_ * n2, "right action", field());
  require_shape(left_coaction_, n1 * dim_, dim_, "left coaction", field());
  require_shape(right_coaction_, dim_ * n2, dim_, "right coaction", field());
}

YdlModule YdlModule::with_component(AutQuadruple c) const {
  return YdlModule(std::move(c), dim_, left_action_, right_action_, left_coaction_,
                   right_coaction_);
}
YdlModule YdlModule::with_left_action(Matrix m) const {
  return YdlModule(component_, dim_, std::move(m), right_action_, left_coaction_,
                   right_coaction_);
}
YdlModule YdlModule::with_right_action(Matrix m) const {
  return YdlModule(component_, dim_, left_action_, std::move(m), left_coaction_,
                   right_coaction_);
}
YdlModule YdlModule::with_left_coaction(Matrix m) const {
  return YdlModule(component_, dim_, left_action_, right_action_, std::move(m),
                   right_coaction_);
}
YdlModule YdlModule::with_right_coaction(Matrix m) const {
  return YdlModule(component_, dim_, left_action_, right_action_, left_coaction_,
                   std::move(m));
}

bool operator==(const YdlModule& a, const YdlModule& b) {
  return a.dim_ == b.dim_ && a.component_ == b.component_ &&
         a.left_action_ == b.left_action_ && a.right_action_ == b.right_action_ &&
         a.left_coaction_ == b.left_coaction_ && a.right_coaction_ == b.right_coaction_;
}

InvolutionQuadruple InvolutionQuadruple::trivial(const HopfAlgebra& h1, const HopfAlgebra& h2) {
  return {h1.counit(), h1.unit(), h2.counit(), h2.unit()};
}

ValidationReport check_bimodule_bicomodule(const YdlModule& m) {
  const auto& f = m.field();
  const auto& H1 = *m.h1();
  const auto& H2 = *m.h2();
  const std::size_t n1 = H1.dim(), n2 = H2.dim(), d = m.dim();
  const Matrix id = Matrix::identity(f, d);
  const auto& L = m.left_action();
  const auto& R = m.right_action();
  const auto& C1 = m.left_coaction();
  const auto& C2 = m.right_coaction();
  using N = LegNetwork;
  ValidationReport rep;

  rep.add(compare_maps("left_action_unit",
                       N(f, {d}).act(0, 0, H1.unit(), {n1}).act(0, 2, L, {d}).matrix(), id,
                       {d}, {d}));
  rep.add(compare_maps("left_action_assoc",
                       N(f, {n1, n1, d}).act(0, 2, H1.mult(), {n1}).act(0, 2, L, {d}).matrix(),
                       N(f, {n1, n1, d}).act(1, 2, L, {d}).act(0, 2, L, {d}).matrix(),
                       {n1, n1, d}, {d}));
  rep.add(compare_maps("right_action_unit",
                       N(f, {d}).act(1, 0, H2.unit(), {n2}).act(0, 2, R, {d}).matrix(), id,
                       {d}, {d}));
  rep.add(compare_maps("right_action_assoc",
                       N(f, {d, n2, n2}).act(1, 2, H2.mult(), {n2}).act(0, 2, R, {d}).matrix(),
                       N(f, {d, n2, n2}).act(0, 2, R, {d}).act(0, 2, R, {d}).matrix(),
                       {d, n2, n2}, {d}));
  rep.add(compare_maps("actions_commute",
                       N(f, {n1, d, n2}).act(0, 2, L, {d}).act(0, 2, R, {d}).matrix(),
                       N(f, {n1, d, n2}).act(1, 2, R, {d}).act(0, 2, L, {d}).matrix(),
                       {n1, d, n2}, {d}));
  rep.add(compare_maps("left_coaction_counit",
                       N(f, {d}).act(0, 1, C1, {n1, d}).act(0, 1, H1.counit(), {}).matrix(), id,
                       {d}, {d}));
  rep.add(compare_maps("left_coaction_coassoc",
                       N(f, {d}).act(0, 1, C1, {n1, d}).act(1, 1, C1, {n1, d}).matrix(),
                       N(f, {d}).act(0, 1, C1, {n1, d}).act(0, 1, H1.comult(), {n1, n1}).matrix(),
                       {d}, {n1, n1, d}));
  rep.add(compare_maps("right_coaction_counit",
                       N(f, {d}).act(0, 1, C2, {d, n2}).act(1, 1, H2.counit(), {}).matrix(), id,
                       {d}, {d}));
  rep.add(compare_maps("right_coaction_coassoc",
                       N(f, {d}).act(0, 1, C2, {d, n2}).act(0, 1, C2, {d, n2}).matrix(),
                       N(f, {d}).act(0, 1, C2, {d, n2}).act(1, 1, H2.comult(), {n2, n2}).matrix(),
                       {d}, {d, n2, n2}));
  rep.add(compare_maps("coactions_commute",
                       N(f, {d}).act(0, 1, C1, {n1, d}).act(1, 1, C2, {d, n2}).matrix(),
                       N(f, {d}).act(0, 1, C2, {d, n2}).act(0, 1, C1, {n1, d}).matrix(), {d},
                       {n1, d, n2}));
  return rep;
}

namespace {

CheckResult left_yd_compat(const YdlModule& m) {
  const auto& f = m.field();
  const auto& H1 = *m.h1();
  const std::size_t n1 = H1.dim(), d = m.dim();
  const auto& L = m.left_action();
  const auto& C1 = m.left_coaction();
  // a(h1) m_(-1) (x) h2 > m_(0)
  Matrix lhs = LegNetwork(f, {n1, d})
                   .act(0, 1, H1.comult(), {n1, n1})
                   .act(2, 1, C1, {n1, d})
                   .permute({0, 2, 1, 3})
                   .act(0, m.component().alpha().matrix())
                   .act(0, 2, H1.mult(), {n1})
                   .act(1, 2, L, {d})
                   .matrix();
  // (h1 > m)_(-1) b(h2) (x) (h1 > m)_(0)
  Matrix rhs = LegNetwork(f, {n1, d})
                   .act(0, 1, H1.comult(), {n1, n1})
                   .permute({0, 2, 1})
                   .act(0, 2, L, {d})
                   .act(0, 1, C1, {n1, d})
                   .act(2, m.component().beta().matrix())
                   .permute({0, 2, 1})
                   .act(0, 2, H1.mult(), {n1})
                   .matrix();
  return compare_maps("left_yd_compat", lhs, rhs, {n1, d}, {n1, d});
}

CheckResult right_yd_compat(const YdlModule& m) {
  const auto& f = m.field();
  const auto& H2 = *m.h2();
  const std::size_t n2 = H2.dim(), d = m.dim();
  const auto& R = m.right_action();
  const auto& C2 = m.right_coaction();
  // m_(0) < h1 (x) m_(1) d(h2)
  Matrix lhs = LegNetwork(f, {d, n2})
                   .act(1, 1, H2.comult(), {n2, n2})
                   .act(0, 1, C2, {d, n2})
                   .permute({0, 2, 1, 3})
                   .act(3, m.component().delta().matrix())
                   .act(0, 2, R, {d})
                   .act(1, 2, H2.mult(), {n2})
                   .matrix();
  // (m < h2)_(0) (x) g(h1) (m < h2)_(1)
  Matrix rhs = LegNetwork(f, {d, n2})
                   .act(1, 1, H2.comult(), {n2, n2})
                   .permute({1, 0, 2})
                   .act(1, 2, R, {d})
                   .act(1, 1, C2, {d, n2})
                   .act(0, m.component().gamma().matrix())
                   .permute({1, 0, 2})
                   .act(1, 2, H2.mult(), {n2})
                   .matrix();
  return compare_maps("right_yd_compat", lhs, rhs, {d, n2}, {d, n2});
}

CheckResult left_yd_closed(const YdlModule& m) {
  const auto& f = m.field();
  const auto& H1 = *m.h1();
  const std::size_t n1 = H1.dim(), d = m.dim();
  const auto& L = m.left_action();
  const auto& C1 = m.left_coaction();
  Matrix lhs = LegNetwork(f, {n1, d}).act(0, 2, L, {d}).act(0, 1, C1, {n1, d}).matrix();
  Matrix rhs = LegNetwork(f, {n1, d})
                   .act(0, 1, H1.comult(), {n1, n1})
                   .act(1, 1, H1.comult(), {n1, n1})
                   .act(3, 1, C1, {n1, d})
                   .permute({0, 3, 2, 1, 4})
                   .act(0, m.component().alpha().matrix())
                   .act(2, mat_mul(m.component().beta().matrix(), H1.antipode()))
                   .act(0, 2, H1.mult(), {n1})
                   .act(0, 2, H1.mult(), {n1})
                   .act(1, 2, L, {d})
                   .matrix();
  return compare_maps("left_yd_closed", lhs, rhs, {n1, d}, {n1, d});
}

CheckResult right_yd_closed(const YdlModule& m) {
  const auto& f = m.field();
  const auto& H2 = *m.h2();
  const std::size_t n2 = H2.dim(), d = m.dim();
  const auto& R = m.right_action();
  const auto& C2 = m.right_coaction();
  Matrix lhs = LegNetwork(f, {d, n2}).act(0, 2, R, {d}).act(0, 1, C2, {d, n2}).matrix();
  Matrix rhs = LegNetwork(f, {d, n2})
                   .act(1, 1, H2.comult(), {n2, n2})
                   .act(2, 1, H2.comult(), {n2, n2})
                   .act(0, 1, C2, {d, n2})
                   .permute({0, 3, 2, 1, 4})
                   .act(2, mat_mul(m.component().gamma().matrix(), H2.antipode()))
                   .act(4, m.component().delta().matrix())
                   .act(2, 2, H2.mult(), {n2})
                   .act(2, 2, H2.mult(), {n2})
                   .act(0, 2, R, {d})
                   .matrix();
  return compare_maps("right_yd_closed", lhs, rhs, {d, n2}, {d, n2});
}

}  // namespace

ValidationReport check_ydl_axioms(const YdlModule& m) {
  const auto& f = m.field();
  const auto& H1 = *m.h1();
  const auto& H2 = *m.h2();
  const std::size_t n1 = H1.dim(), n2 = H2.dim(), d = m.dim();
  const auto& L = m.left_action();
  const auto& R = m.right_action();
  const auto& C1 = m.left_coaction();
  const auto& C2 = m.right_coaction();
  ValidationReport rep;
  rep.add(left_yd_compat(m));
  rep.add(compare_maps(
      "left_action_colinear",
      LegNetwork(f, {n1, d}).act(0, 2, L, {d}).act(0, 1, C2, {d, n2}).matrix(),
      LegNetwork(f, {n1, d}).act(1, 1, C2, {d, n2}).act(0, 2, L, {d}).matrix(), {n1, d},
      {d, n2}));
  rep.add(right_yd_compat(m));
  rep.add(compare_maps(
      "right_action_colinear",
      LegNetwork(f, {d, n2}).act(0, 2, R, {d}).act(0, 1, C1, {n1, d}).matrix(),
      LegNetwork(f, {d, n2}).act(0, 1, C1, {n1, d}).act(1, 2, R, {d}).matrix(), {d, n2},
      {n1, d}));
  return rep;
}

ValidationReport check_equivalent_forms(const YdlModule& m) {
  ValidationReport rep;
  CheckResult left = left_yd_closed(m);
  CheckResult right = right_yd_closed(m);
  const bool left_compat = left_yd_compat(m).passed;
  const bool right_compat = right_yd_compat(m).passed;
  rep.add(left);
  rep.add(right);
  rep.add_flag("left_forms_agree", left.passed == left_compat,
               left.passed == left_compat ? "" : "closed form and compatibility disagree");
  rep.add_flag("right_forms_agree", right.passed == right_compat,
               right.passed == right_compat ? "" : "closed form and compatibility disagree");
  return rep;
}

ValidationReport check_module(const YdlModule& m) {
  ValidationReport rep;
  rep.merge(check_bimodule_bicomodule(m));
  rep.merge(check_ydl_axioms(m));
  rep.merge(check_equivalent_forms(m));
  return rep;
}

namespace {

void check_character(ValidationReport& rep, const std::string& name, const HopfAlgebra& h,
                     const Matrix& chi) {
  const std::size_t n = h.dim();
  rep.add(compare_maps(name + "_multiplicative", mat_mul(chi, h.mult()), kron(chi, chi),
                       {n, n}, {}));
  rep.add(compare_maps(name + "_unital", mat_mul(chi, h.unit()),
                       Matrix::identity(h.field(), 1), {}, {}));
}

void check_grouplike(ValidationReport& rep, const std::string& name, const HopfAlgebra& h,
                     const Matrix& g) {
  const std::size_t n = h.dim();
  rep.add(compare_maps(name + "_grouplike", mat_mul(h.comult(), g), kron(g, g), {}, {n, n}));
  rep.add(compare_maps(name + "_counit", mat_mul(h.counit(), g),
                       Matrix::identity(h.field(), 1), {}, {}));
}

}  // namespace

ValidationReport check_involution_quadruple(const InvolutionQuadruple& q,
                                            const AutQuadruple& target) {
  const auto& H1 = *target.h1();
  const auto& H2 = *target.h2();
  const auto& f = H1.field();
  const std::size_t n1 = H1.dim(), n2 = H2.dim();
  auto shape = [](const Matrix& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c) {
      throw DimensionMismatch(std::string("quadruple entry ") + what + " has the wrong shape");
    }
  };
  shape(q.f1, 1, n1, "f1");
  shape(q.g1, n1, 1, "g1");
  shape(q.f2, 1, n2, "f2");
  shape(q.g2, n2, 1, "g2");

  ValidationReport rep;
  check_character(rep, "f1", H1, q.f1);
  check_grouplike(rep, "g1", H1, q.g1);
  check_character(rep, "f2", H2, q.f2);
  check_grouplike(rep, "g2", H2, q.g2);

  // h -> f1(h1) beta(h2) f1(S h3), then conjugated by g1.
  Matrix twisted1 = LegNetwork(f, {n1})
                        .act(0, 1, H1.comult(), {n1, n1})
                        .act(1, 1, H1.comult(), {n1, n1})
                        .act(0, 1, q.f1, {})
                        .act(1, 1, mat_mul(q.f1, H1.antipode()), {})
                        .act(0, target.beta().matrix())
                        .matrix();
  Matrix g1_inv = mat_mul(H1.antipode(), q.g1);
  Matrix alpha_pred =
      mat_mul(mat_mul(H1.left_mult(q.g1), H1.right_mult(g1_inv)), twisted1);
  rep.add(compare_maps("alpha_twist", target.alpha().matrix(), alpha_pred, {n1}, {n1}));

  // h -> f2(S h1) gamma(h2) f2(h3), then conjugated by g2^-1.
  Matrix twisted2 = LegNetwork(f, {n2})
                        .act(0, 1, H2.comult(), {n2, n2})
                        .act(1, 1, H2.comult(), {n2, n2})
                        .act(0, 1, mat_mul(q.f2, H2.antipode()), {})
                        .act(1, 1, q.f2, {})
                        .act(0, target.gamma().matrix())
                        .matrix();
  Matrix g2_inv = mat_mul(H2.antipode(), q.g2);
  Matrix delta_pred =
      mat_mul(mat_mul(H2.left_mult(g2_inv), H2.right_mult(q.g2)), twisted2);
  rep.add(compare_maps("delta_twist", target.delta().matrix(), delta_pred, {n2}, {n2}));
  return rep;
}

YdlModule trivial_module(std::size_t dim, const InvolutionQuadruple& q,
                         const AutQuadruple& target) {
  auto rep = check_involution_quadruple(q, target);
  if (!rep.all_passed()) {
    std::string failed;
    for (const auto& name : rep.failures()) failed += " " + name;
    throw InvalidQuadruple("quadruple is not in involution for the target:" + failed);
  }
  const auto& f = target.h1()->field();
  const std::size_t n1 = target.h1()->dim(), n2 = target.h2()->dim(), d = dim;
  Matrix L(f, d, n1 * d), R(f, d, d * n2), C1(f, n1 * d, d), C2(f, d * n2, d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t h = 0; h < n1; ++h) {
      L(v, h * d + v) = q.f1(0, h);
      C1(h * d + v, v) = q.g1(h, 0);
    }
    for (std::size_t h = 0; h < n2; ++h) {
      R(v, v * n2 + h) = q.f2(0, h);
      C2(v * n2 + h, v) = q.g2(h, 0);
    }
  }
  return YdlModule(target, d, std::move(L), std::move(R), std::move(C1), std::move(C2));
}

YdlModule unit_module(const HopfPtr& h1, const HopfPtr& h2) {
  return trivial_module(1, InvolutionQuadruple::trivial(*h1, *h2), unitG(h1, h2));
}

YdlModule regular_module(const AutQuadruple& c) {
  const auto& H1 = *c.h1();
  const auto& H2 = *c.h2();
  const auto& f = H1.field();
  const std::size_t n1 = H1.dim(), n2 = H2.dim();
  Matrix L = LegNetwork(f, {n1, n1, n2})
                 .act(0, 1, H1.comult(), {n1, n1})
                 .permute({0, 2, 1, 3})
                 .act(0, c.alpha().matrix())
                 .act(2, mat_mul(c.beta().matrix(), H1.antipode()))
                 .act(0, 2, H1.mult(), {n1})
                 .act(0, 2, H1.mult(), {n1})
                 .matrix();
  Matrix C1 = LegNetwork(f, {n1, n2}).act(0, 1, H1.comult(), {n1, n1}).matrix();
  Matrix R = LegNetwork(f, {n1, n2, n2})
                 .act(2, 1, H2.comult(), {n2, n2})
                 .permute({0, 2, 1, 3})
                 .act(1, mat_mul(c.gamma().matrix(), H2.antipode()))
                 .act(3, c.delta().matrix())
                 .act(1, 2, H2.mult(), {n2})
                 .act(1, 2, H2.mult(), {n2})
                 .matrix();
  Matrix C2 = LegNetwork(f, {n1, n2}).act(1, 1, H2.comult(), {n2, n2}).matrix();
  return YdlModule(c, n1 * n2, std::move(L), std::move(R), std::move(C1), std::move(C2));
}

YdlModule direct_sum(const YdlModule& a, const YdlModule& b) {
  if (!(a.component() == b.component())) {
    throw ComponentMismatch("direct sum of modules in different components");
  }
  const auto& f = a.field();
  const std::size_t n1 = a.h1()->dim(), n2 = a.h2()->dim();
  const std::size_t D = a.dim() + b.dim();
  Matrix L(f, D, n1 * D), R(f, D, D * n2), C1(f, n1 * D, D), C2(f, D * n2, D);
  auto place = [&](const YdlModule& m, std::size_t off) {
    const std::size_t d = m.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t h = 0; h < n1; ++h) {
          L(off + i, h * D + off + j) = m.left_action()(i, h * d + j);
          C1(h * D + off + j, off + i) = m.left_coaction()(h * d + j, i);
        }
        for (std::size_t h = 0; h < n2; ++h) {
          R(off + i, (off + j) * n2 + h) = m.right_action()(i, j * n2 + h);
          C2((off + j) * n2 + h, off + i) = m.right_coaction()(j * n2 + h, i);
        }
      }
  };
  place(a, 0);
  place(b, a.dim());
  return YdlModule(a.component(), D, std::move(L), std::move(R), std::move(C1), std::move(C2));
}

std::pair<bool, ValidationReport> is_ydl_morphism(const Matrix& fm, const YdlModule& m,
                                                  const YdlModule& n) {
  if (!same_algebra(m.h1(), n.h1()) || !same_algebra(m.h2(), n.h2())) {
    throw AlgebraMismatch("morphism between modules over different algebras");
  }
  if (!(m.component() == n.component())) {
    throw ComponentMismatch("morphisms only exist inside one component");
  }
  if (fm.rows() != n.dim() || fm.cols() != m.dim()) {
    throw DimensionMismatch("morphism must be " + std::to_string(n.dim()) + "x" +
                            std::to_string(m.dim()));
  }
  const auto& f = m.field();
  const std::size_t n1 = m.h1()->dim(), n2 = m.h2()->dim();
  const std::size_t dm = m.dim(), dn = n.dim();
  using N = LegNetwork;
  ValidationReport rep;
  rep.add(compare_maps("left_linear", mat_mul(fm, m.left_action()),
                       N(f, {n1, dm}).act(1, 1, fm, {dn}).act(0, 2, n.left_action(), {dn}).matrix(),
                       {n1, dm}, {dn}));
  rep.add(compare_maps("right_linear", mat_mul(fm, m.right_action()),
                       N(f, {dm, n2}).act(0, 1, fm, {dn}).act(0, 2, n.right_action(), {dn}).matrix(),
                       {dm, n2}, {dn}));
  rep.add(compare_maps("left_colinear", mat_mul(n.left_coaction(), fm),
                       N(f, {dm}).act(0, 1, m.left_coaction(), {n1, dm}).act(1, 1, fm, {dn}).matrix(),
                       {dm}, {n1, dn}));
  rep.add(compare_maps("right_colinear", mat_mul(n.right_coaction(), fm),
                       N(f, {dm}).act(0, 1, m.right_coaction(), {dm, n2}).act(0, 1, fm, {dn}).matrix(),
                       {dm}, {dn, n2}));
  return {rep.all_passed(), rep};
}

std::vector<Matrix> hom_space(const YdlModule& m, const YdlModule& n) {
  if (!same_algebra(m.h1(), n.h1()) || !same_algebra(m.h2(), n.h2())) {
    throw AlgebraMismatch("hom space between modules over different algebras");
  }
  if (!(m.component() == n.component())) {
    throw ComponentMismatch("morphisms only exist inside one component");
  }
  const auto& fld = m.field();
  const std::size_t n1 = m.h1()->dim(), n2 = m.h2()->dim();
  const std::size_t dm = m.dim(), dn = n.dim();
  const auto var = [dm](std::size_t r, std::size_t k) { return r * dm + k; };
  const Matrix &lm = m.left_action(), &ln = n.left_action();
  const Matrix &rm = m.right_action(), &rn = n.right_action();
  const Matrix &cm1 = m.left_coaction(), &cn1 = n.left_coaction();
  const Matrix &cm2 = m.right_coaction(), &cn2 = n.right_coaction();

  const std::size_t eqs = dn * n1 * dm + dn * dm * n2 + n1 * dn * dm + dn * n2 * dm;
  Matrix sys(fld, eqs, dn * dm);
  std::size_t row = 0;
  // f (h > x) = h > f(x)
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t h = 0; h < n1; ++h)
      for (std::size_t c = 0; c < dm; ++c, ++row) {
        for (std::size_t k = 0; k < dm; ++k) sys(row, var(r, k)) += lm(k, h * dm + c);
        for (std::size_t k = 0; k < dn; ++k) sys(row, var(k, c)) -= ln(r, h * dn + k);
      }
  // f (x < h) = f(x) < h
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c)
      for (std::size_t h = 0; h < n2; ++h, ++row) {
        for (std::size_t k = 0; k < dm; ++k) sys(row, var(r, k)) += rm(k, c * n2 + h);
        for (std::size_t k = 0; k < dn; ++k) sys(row, var(k, c)) -= rn(r, k * n2 + h);
      }
  // (id (x) f) rho1 = rho1 f
  for (std::size_t h = 0; h < n1; ++h)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c, ++row) {
        for (std::size_t k = 0; k < dm; ++k) sys(row, var(r, k)) += cm1(h * dm + k, c);
        for (std::size_t k = 0; k < dn; ++k) sys(row, var(k, c)) -= cn1(h * dn + r, k);
      }
  // (f (x) id) rho2 = rho2 f
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t h = 0; h < n2; ++h)
      for (std::size_t c = 0; c < dm; ++c, ++row) {
        for (std::size_t k = 0; k < dm; ++k) sys(row, var(r, k)) += cm2(k * n2 + h, c);
        for (std::size_t k = 0; k < dn; ++k) sys(row, var(k, c)) -= cn2(r * n2 + h, k);
      }

  const Matrix kernel = mat_kernel(sys);
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    Matrix f(fld, dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t k = 0; k < dm; ++k) f(r, k) = kernel(var(r, k), j);
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace ydlcat

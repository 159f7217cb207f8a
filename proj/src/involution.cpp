#include "ydlcat/involution.hpp"

#include <random>

#include "ydlcat/errors.hpp"

namespace ydlcat {

namespace {

void require_valid(const InvolutionQuadruple& q, const AutQuadruple& target) {
  auto rep = check_involution_quadruple(q, target);
  if (!rep.all_passed()) {
    std::string failed;
    for (const auto& name : rep.failures()) failed += (failed.empty() ? "" : ", ") + name;
    throw InvalidQuadruple("quadruple is not in involution for " + to_string(target) + ": " +
                           failed);
  }
}

// (u (x) v) o Delta for a row functional or square map on either side.
Matrix convolve(const HopfAlgebra& h, const Matrix& u, const Matrix& v) {
  return mat_mul(kron(u, v), h.comult());
}

Matrix with_identity_right(const Matrix& a, std::size_t d) {
  return kron(a, Matrix::identity(a.field(), d));
}

Matrix with_identity_left(std::size_t d, const Matrix& a) {
  return kron(Matrix::identity(a.field(), d), a);
}

Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng) {
  Matrix out = mat_scale(Scalar::zero(basis.front().field()), basis.front());
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& b : basis) out = mat_add(out, mat_scale(Scalar(b.field(), coeff(rng)), b));
  return out;
}

}  // namespace

YdlModule functor_F(const YdlModule& m, const InvolutionQuadruple& q) {
  const auto& c = m.component();
  require_valid(q, c);
  const HopfAlgebra& h1 = *m.h1();
  const HopfAlgebra& h2 = *m.h2();
  const std::size_t d = m.dim();
  const Matrix& b_inv = c.beta().inverse_matrix();
  const Matrix& g_inv = c.gamma().inverse_matrix();

  Matrix left_op = convolve(h1, mat_mul(q.f1, mat_mul(b_inv, h1.antipode())), b_inv);
  Matrix right_op = convolve(h2, g_inv, mat_mul(q.f2, mat_mul(g_inv, h2.antipode())));
  Matrix g1_inv = mat_mul(h1.antipode(), q.g1);
  Matrix g2_inv = mat_mul(h2.antipode(), q.g2);

  return YdlModule(unitG(m.h1(), m.h2()), d,
                   mat_mul(m.left_action(), with_identity_right(left_op, d)),
                   mat_mul(m.right_action(), with_identity_left(d, right_op)),
                   mat_mul(with_identity_right(h1.left_mult(g1_inv), d), m.left_coaction()),
                   mat_mul(with_identity_left(d, h2.right_mult(g2_inv)), m.right_coaction()));
}

YdlModule functor_G(const YdlModule& n, const InvolutionQuadruple& q, const AutQuadruple& target) {
  if (!is_unit(n.component())) {
    throw ComponentMismatch("functor G expects a module in the unit component, got " +
                            to_string(n.component()));
  }
  if (!same_algebra(n.h1(), target.h1()) || !same_algebra(n.h2(), target.h2())) {
    throw AlgebraMismatch("target component is over different algebras");
  }
  require_valid(q, target);
  const HopfAlgebra& h1 = *n.h1();
  const HopfAlgebra& h2 = *n.h2();
  const std::size_t d = n.dim();

  Matrix left_op = convolve(h1, q.f1, target.beta().matrix());
  Matrix right_op = convolve(h2, target.gamma().matrix(), q.f2);

  return YdlModule(target, d, mat_mul(n.left_action(), with_identity_right(left_op, d)),
                   mat_mul(n.right_action(), with_identity_left(d, right_op)),
                   mat_mul(with_identity_right(h1.left_mult(q.g1), d), n.left_coaction()),
                   mat_mul(with_identity_left(d, h2.right_mult(q.g2)), n.right_coaction()));
}

ValidationReport check_iso_pair(const YdlModule& m, const InvolutionQuadruple& q) {
  ValidationReport rep;
  const YdlModule fm = functor_F(m, q);
  rep.merge(check_module(fm), "F.");

  const YdlModule gfm = functor_G(fm, q, m.component());
  const YdlModule fgfm = functor_F(gfm, q);
  const std::vector<std::size_t> lin = {m.h1()->dim(), m.dim()};
  const std::vector<std::size_t> rin = {m.dim(), m.h2()->dim()};
  const std::vector<std::size_t> d = {m.dim()};
  rep.add(compare_maps("GF_left_action", gfm.left_action(), m.left_action(), lin, d));
  rep.add(compare_maps("GF_right_action", gfm.right_action(), m.right_action(), rin, d));
  rep.add(compare_maps("GF_left_coaction", gfm.left_coaction(), m.left_coaction(), d, lin));
  rep.add(compare_maps("GF_right_coaction", gfm.right_coaction(), m.right_coaction(), d, rin));
  rep.add_flag("GF_component", gfm.component() == m.component());
  rep.add_flag("FG_identity", fgfm == fm);

  const auto ends_m = hom_space(m, m);
  const auto ends_fm = hom_space(fm, fm);
  rep.add_flag("hom_dimension_preserved", ends_m.size() == ends_fm.size());
  std::mt19937_64 rng(0x5eed);
  bool forward = true, backward = true;
  for (int trial = 0; trial < 3; ++trial) {
    if (!ends_m.empty()) forward = forward && is_ydl_morphism(random_combination(ends_m, rng), fm, fm).first;
    if (!ends_fm.empty()) backward = backward && is_ydl_morphism(random_combination(ends_fm, rng), m, m).first;
  }
  rep.add_flag("morphisms_transport_forward", forward);
  rep.add_flag("morphisms_transport_backward", backward);
  return rep;
}

}  // namespace ydlcat

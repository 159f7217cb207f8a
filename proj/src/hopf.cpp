#include "ydlcat/hopf.hpp"

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

HopfAlgebra::HopfAlgebra(std::string name, FieldCtx field, std::vector<std::string> labels,
                         Matrix mult, Matrix unit, Matrix comult, Matrix counit,
                         Matrix antipode)
    : name_(std::move(name)),
      field_(field),
      dim_(mult.rows()),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = dim_;
  if (n == 0) throw DimensionMismatch("Hopf algebra of dimension 0");
  require_shape(mult_, n, n * n, "mult", field_);
  require_shape(unit_, n, 1, "unit", field_);
  require_shape(comult_, n * n, n, "comult", field_);
  require_shape(counit_, 1, n, "counit", field_);
  require_shape(antipode_, n, n, "antipode", field_);
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != n) throw DimensionMismatch("wrong number of basis labels");
  try {
    antipode_inv_ = mat_inv(antipode_);
  } catch (const SingularMatrix&) {
    antipode_inv_.reset();
  }
}

const Matrix& HopfAlgebra::antipode_inv() const {
  if (!antipode_inv_) throw SingularMatrix(name_ + ": antipode is not invertible");
  return *antipode_inv_;
}

Matrix HopfAlgebra::basis_vector(std::size_t i) const {
  Matrix v(field_, dim_, 1);
  v.set(i, 0, 1);
  return v;
}

Matrix HopfAlgebra::left_mult(const Matrix& a) const {
  return LegNetwork(field_, {dim_}).act(0, 0, a, {dim_}).act(0, 2, mult_, {dim_}).matrix();
}

Matrix HopfAlgebra::right_mult(const Matrix& a) const {
  return LegNetwork(field_, {dim_}).act(1, 0, a, {dim_}).act(0, 2, mult_, {dim_}).matrix();
}

Matrix HopfAlgebra::multiply(const Matrix& a, const Matrix& b) const {
  return mat_mul(left_mult(a), b);
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.mult_ == b.mult_ &&
         a.unit_ == b.unit_ && a.comult_ == b.comult_ && a.counit_ == b.counit_ &&
         a.antipode_ == b.antipode_;
}

bool same_algebra(const HopfPtr& a, const HopfPtr& b) {
  return a == b || (a && b && *a == *b);
}

ValidationReport validate_hopf(const HopfAlgebra& h) {
  const auto& f = h.field();
  const std::size_t n = h.dim();
  const Matrix one = Matrix::identity(f, 1);
  ValidationReport rep;
  using N = LegNetwork;

  rep.add(compare_maps("mult_associative",
                       N(f, {n, n, n}).act(0, 2, h.mult(), {n}).act(0, 2, h.mult(), {n}).matrix(),
                       N(f, {n, n, n}).act(1, 2, h.mult(), {n}).act(0, 2, h.mult(), {n}).matrix(),
                       {n, n, n}, {n}));
  rep.add(compare_maps("unit_left",
                       N(f, {n}).act(0, 0, h.unit(), {n}).act(0, 2, h.mult(), {n}).matrix(),
                       h.identity(), {n}, {n}));
  rep.add(compare_maps("unit_right",
                       N(f, {n}).act(1, 0, h.unit(), {n}).act(0, 2, h.mult(), {n}).matrix(),
                       h.identity(), {n}, {n}));
  rep.add(compare_maps(
      "comult_coassociative",
      N(f, {n}).act(0, 1, h.comult(), {n, n}).act(0, 1, h.comult(), {n, n}).matrix(),
      N(f, {n}).act(0, 1, h.comult(), {n, n}).act(1, 1, h.comult(), {n, n}).matrix(), {n},
      {n, n, n}));
  rep.add(compare_maps(
      "counit_left",
      N(f, {n}).act(0, 1, h.comult(), {n, n}).act(0, 1, h.counit(), {}).matrix(),
      h.identity(), {n}, {n}));
  rep.add(compare_maps(
      "counit_right",
      N(f, {n}).act(0, 1, h.comult(), {n, n}).act(1, 1, h.counit(), {}).matrix(),
      h.identity(), {n}, {n}));
  rep.add(compare_maps("comult_multiplicative",
                       N(f, {n, n}).act(0, 2, h.mult(), {n}).act(0, 1, h.comult(), {n, n}).matrix(),
                       N(f, {n, n})
                           .act(0, 1, h.comult(), {n, n})
                           .act(2, 1, h.comult(), {n, n})
                           .permute({0, 2, 1, 3})
                           .act(0, 2, h.mult(), {n})
                           .act(1, 2, h.mult(), {n})
                           .matrix(),
                       {n, n}, {n, n}));
  rep.add(compare_maps("comult_unital",
                       N(f, {}).act(0, 0, h.unit(), {n}).act(0, 1, h.comult(), {n, n}).matrix(),
                       N(f, {}).act(0, 0, h.unit(), {n}).act(1, 0, h.unit(), {n}).matrix(), {},
                       {n, n}));
  rep.add(compare_maps("counit_multiplicative",
                       N(f, {n, n}).act(0, 2, h.mult(), {n}).act(0, 1, h.counit(), {}).matrix(),
                       N(f, {n, n}).act(0, 1, h.counit(), {}).act(0, 1, h.counit(), {}).matrix(),
                       {n, n}, {}));
  rep.add(compare_maps("counit_unital", mat_mul(h.counit(), h.unit()), one, {}, {}));
  const Matrix unit_counit = mat_mul(h.unit(), h.counit());
  rep.add(compare_maps("antipode_left",
                       N(f, {n})
                           .act(0, 1, h.comult(), {n, n})
                           .act(0, h.antipode())
                           .act(0, 2, h.mult(), {n})
                           .matrix(),
                       unit_counit, {n}, {n}));
  rep.add(compare_maps("antipode_right",
                       N(f, {n})
                           .act(0, 1, h.comult(), {n, n})
                           .act(1, h.antipode())
                           .act(0, 2, h.mult(), {n})
                           .matrix(),
                       unit_counit, {n}, {n}));
  rep.add_flag("antipode_invertible", h.has_antipode_inverse());
  return rep;
}

HopfPtr group_algebra(const GroupTable& table, const FieldCtx& field) {
  const std::size_t n = table.order();
  Matrix mult(field, n, n * n), unit(field, n, 1), comult(field, n * n, n),
      counit(field, 1, n), antipode(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.set(table.mul(a, b), a * n + b, 1);
    comult.set(a * n + a, a, 1);
    counit.set(0, a, 1);
    antipode.set(table.inverse(a), a, 1);
  }
  unit.set(table.identity(), 0, 1);
  return std::make_shared<const HopfAlgebra>("k[" + table.name() + "]", field, table.labels(),
                                             std::move(mult), std::move(unit),
                                             std::move(comult), std::move(counit),
                                             std::move(antipode));
}

HopfPtr sweedler_h4(const FieldCtx& field) {
  if (field.characteristic() == 2) {
    throw UnsupportedField("Sweedler's algebra needs characteristic other than 2");
  }
  // e_{a + 2b} = g^a x^b
  const std::size_t n = 4;
  Matrix mult(field, n, n * n), unit(field, n, 1), comult(field, n * n, n),
      counit(field, 1, n), antipode(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
      if (b + d >= 2) continue;
      // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
      mult.set((a + c) % 2 + 2 * (b + d), i * n + j, (b * c) % 2 ? -1 : 1);
    }
  unit.set(0, 0, 1);
  comult.set(0 * n + 0, 0, 1);  // 1 -> 1(x)1
  comult.set(1 * n + 1, 1, 1);  // g -> g(x)g
  comult.set(2 * n + 0, 2, 1);  // x -> x(x)1 + g(x)x
  comult.set(1 * n + 2, 2, 1);
  comult.set(3 * n + 1, 3, 1);  // gx -> gx(x)g + 1(x)gx
  comult.set(0 * n + 3, 3, 1);
  counit.set(0, 0, 1);
  counit.set(0, 1, 1);
  antipode.set(0, 0, 1);
  antipode.set(1, 1, 1);
  antipode.set(3, 2, -1);  // S(x) = -gx
  antipode.set(2, 3, 1);   // S(gx) = x
  return std::make_shared<const HopfAlgebra>("H4", field,
                                             std::vector<std::string>{"1", "g", "x", "gx"},
                                             std::move(mult), std::move(unit),
                                             std::move(comult), std::move(counit),
                                             std::move(antipode));
}

HopfPtr dual_hopf(const HopfAlgebra& h) {
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(l + "*");
  return std::make_shared<const HopfAlgebra>(h.name() + "*", h.field(), std::move(labels),
                                             h.comult().transpose(), h.counit().transpose(),
                                             h.mult().transpose(), h.unit().transpose(),
                                             h.antipode().transpose());
}

std::pair<bool, ValidationReport> is_automorphism(const HopfAlgebra& h, const Matrix& a) {
  const std::size_t n = h.dim();
  if (a.rows() != n || a.cols() != n) {
    throw DimensionMismatch("automorphism candidate must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  const auto& f = h.field();
  ValidationReport rep;
  bool invertible = true;
  try {
    (void)mat_inv(a);
  } catch (const SingularMatrix&) {
    invertible = false;
  }
  rep.add_flag("invertible", invertible);
  rep.add(compare_maps("multiplicative", mat_mul(a, h.mult()),
                       mat_mul(h.mult(), kron(a, a)), {n, n}, {n}));
  rep.add(compare_maps("unital", mat_mul(a, h.unit()), h.unit(), {}, {n}));
  rep.add(compare_maps("comultiplicative", mat_mul(h.comult(), a),
                       mat_mul(kron(a, a), h.comult()), {n}, {n, n}));
  rep.add(compare_maps("counital", mat_mul(h.counit(), a), h.counit(), {n}, {}));
  rep.add(compare_maps("commutes_with_antipode", mat_mul(a, h.antipode()),
                       mat_mul(h.antipode(), a), {n}, {n}));
  (void)f;
  return {rep.all_passed(), rep};
}

HopfAutomorphism HopfAutomorphism::identity(HopfPtr algebra) {
  Matrix id = algebra->identity();
  return HopfAutomorphism(std::move(algebra), id, id);
}

HopfAutomorphism HopfAutomorphism::create(HopfPtr algebra, Matrix matrix) {
  auto [ok, rep] = is_automorphism(*algebra, matrix);
  if (!ok) {
    std::string failed;
    for (const auto& name : rep.failures()) failed += " " + name;
    throw InvalidAutomorphism("not a Hopf automorphism of " + algebra->name() + ":" + failed);
  }
  Matrix inv = mat_inv(matrix);
  return HopfAutomorphism(std::move(algebra), std::move(matrix), std::move(inv));
}

bool operator==(const HopfAutomorphism& a, const HopfAutomorphism& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.matrix_ == b.matrix_;
}

HopfAutomorphism aut_compose(const HopfAutomorphism& a, const HopfAutomorphism& b) {
  if (!same_algebra(a.algebra_, b.algebra_)) {
    throw AlgebraMismatch("composing automorphisms of " + a.algebra_->name() + " and " +
                          b.algebra_->name());
  }
  // Automorphisms are closed under composition; no revalidation.
  return HopfAutomorphism(a.algebra_, mat_mul(a.matrix_, b.matrix_),
                          mat_mul(b.inverse_, a.inverse_));
}

HopfAutomorphism aut_inverse(const HopfAutomorphism& a) {
  return HopfAutomorphism(a.algebra_, a.inverse_, a.matrix_);
}

HopfAutomorphism sweedler_scaling(const HopfPtr& h4, const Scalar& lambda) {
  Matrix m = h4->identity();
  m(2, 2) = lambda;
  m(3, 3) = lambda;
  return HopfAutomorphism::create(h4, std::move(m));
}

HopfAutomorphism lift_group_aut(const HopfPtr& group_alg, const GroupAut& aut) {
  const std::size_t n = group_alg->dim();
  if (aut.size() != n) throw DimensionMismatch("group automorphism size differs from algebra");
  Matrix m(group_alg->field(), n, n);
  for (std::size_t g = 0; g < n; ++g) m.set(aut(g), g, 1);
  return HopfAutomorphism::create(group_alg, std::move(m));
}

}  // namespace ydlcat

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydlcat/group.hpp"
#include "ydlcat/matrix.hpp"
#include "ydlcat/report.hpp"

namespace ydlcat {

/// A finite-dimensional Hopf algebra stored as structure maps on the basis
/// e_0..e_{n-1}:
///   mult     n x n^2   mult(k, i*n+j)    = coefficient of e_k in e_i e_j
///   unit     n x 1
///   comult   n^2 x n   comult(j*n+k, i)  = coefficient of e_j (x) e_k in D(e_i)
///   counit   1 x n
///   antipode n x n, with its inverse cached when it exists.
/// Construction checks shapes only; validate_hopf() checks the axioms.
class HopfAlgebra {
 public:
  HopfAlgebra(std::string name, FieldCtx field, std::vector<std::string> labels,
              Matrix mult, Matrix unit, Matrix comult, Matrix counit, Matrix antipode);

  const std::string& name() const { return name_; }
  const FieldCtx& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Matrix& mult() const { return mult_; }
  const Matrix& unit() const { return unit_; }
  const Matrix& comult() const { return comult_; }
  const Matrix& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }
  bool has_antipode_inverse() const { return antipode_inv_.has_value(); }
  /// Throws SingularMatrix when the stored antipode is not invertible.
  const Matrix& antipode_inv() const;

  const Scalar& mult_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_(k, i * dim_ + j);
  }
  const Scalar& comult_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return comult_(j * dim_ + k, i);
  }

  Matrix identity() const { return Matrix::identity(field_, dim_); }
  /// e_i as an n x 1 column.
  Matrix basis_vector(std::size_t i) const;
  /// x -> a x and x -> x a for an element a given as a column.
  Matrix left_mult(const Matrix& a) const;
  Matrix right_mult(const Matrix& a) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;

  /// Same field, dimension and structure maps.
  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

 private:
  std::string name_;
  FieldCtx field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  Matrix mult_, unit_, comult_, counit_, antipode_;
  std::optional<Matrix> antipode_inv_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Pointer-identical or structurally equal.
bool same_algebra(const HopfPtr& a, const HopfPtr& b);

/// Checks every Hopf axiom exactly, reporting the first offending basis
/// indices of each failing identity.
ValidationReport validate_hopf(const HopfAlgebra& h);

HopfPtr group_algebra(const GroupTable& table, const FieldCtx& field);
/// Basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx, D(g) = g(x)g,
/// D(x) = x(x)1 + g(x)x. Throws UnsupportedField in characteristic 2.
HopfPtr sweedler_h4(const FieldCtx& field);
/// Dual basis; every structure map is transposed.
HopfPtr dual_hopf(const HopfAlgebra& h);

/// A Hopf algebra automorphism, carrying its algebra and its inverse.
class HopfAutomorphism {
 public:
  static HopfAutomorphism identity(HopfPtr algebra);
  /// Throws InvalidAutomorphism (with the failing identities) unless matrix
  /// is an invertible bialgebra map.
  static HopfAutomorphism create(HopfPtr algebra, Matrix matrix);

  const HopfPtr& algebra() const { return algebra_; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse_matrix() const { return inverse_; }

  friend bool operator==(const HopfAutomorphism& a, const HopfAutomorphism& b);

 private:
  HopfAutomorphism(HopfPtr algebra, Matrix matrix, Matrix inverse)
      : algebra_(std::move(algebra)), matrix_(std::move(matrix)), inverse_(std::move(inverse)) {}
  friend HopfAutomorphism aut_compose(const HopfAutomorphism&, const HopfAutomorphism&);
  friend HopfAutomorphism aut_inverse(const HopfAutomorphism&);

  HopfPtr algebra_;
  Matrix matrix_;
  Matrix inverse_;
};

std::pair<bool, ValidationReport> is_automorphism(const HopfAlgebra& h, const Matrix& a);
/// a o b. Throws AlgebraMismatch across algebras.
HopfAutomorphism aut_compose(const HopfAutomorphism& a, const HopfAutomorphism& b);
HopfAutomorphism aut_inverse(const HopfAutomorphism& a);

/// g -> g, x -> lambda x on Sweedler's algebra.
HopfAutomorphism sweedler_scaling(const HopfPtr& h4, const Scalar& lambda);
/// The linear extension of a group automorphism to k[G].
HopfAutomorphism lift_group_aut(const HopfPtr& group_alg, const GroupAut& aut);

}  // namespace ydlcat

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydlcat/field.hpp"

namespace ydlcat {

/// Dense row-major matrix over an exact field.
///
/// Tensor index convention, used everywhere in the library: the basis vector
/// e_i (x) e_j of A (x) B sits at position i * dim(B) + j. Every structure map
/// and every composite built from structure maps follows it.
class Matrix {
 public:
  Matrix(const FieldCtx& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldCtx& field, std::size_t n);
  /// Integer entries, row by row.
  static Matrix from_rows(const FieldCtx& field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(const FieldCtx& field,
                          const std::vector<std::vector<Scalar>>& rows);

  const FieldCtx& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Sets an entry from a machine integer.
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    (*this)(r, c) = Scalar(field_, value);
  }

  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  std::size_t nonzeros() const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldCtx field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Entry-level comparison; nullopt when the matrices are equal. Throws
/// DimensionMismatch on differing shapes.
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix& a,
                                                                 const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& s, const Matrix& a);
/// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination.
/// Throws SingularMatrix, or DimensionMismatch for a non-square input.
Matrix mat_inv(const Matrix& a);
/// Columns spanning the null space of a, in reduced echelon normal form.
Matrix mat_kernel(const Matrix& a);
std::size_t mat_rank(const Matrix& a);
Matrix mat_pow(const Matrix& a, unsigned exponent);
Matrix kron(const Matrix& a, const Matrix& b);

/// A linear map between coordinate spaces. The matrix is codomain x domain.
class LinMap {
 public:
  explicit LinMap(Matrix matrix) : matrix_(std::move(matrix)) {}

  std::size_t domain_dim() const { return matrix_.cols(); }
  std::size_t codomain_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const FieldCtx& field() const { return matrix_.field(); }

  /// this o before
  LinMap after(const LinMap& before) const;

  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  Matrix matrix_;
};

/// The swap A (x) B -> B (x) A.
LinMap flip_map(const FieldCtx& field, std::size_t dim_a, std::size_t dim_b);

std::string to_string(const Matrix& m);

}  // namespace ydlcat

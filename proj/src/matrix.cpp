#include "ydlcat/matrix.hpp"

#include <sstream>
#include <vector>

#include "ydlcat/errors.hpp"

namespace ydlcat {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(std::string(op) + ": " + a.field().to_string() + " vs " +
                        b.field().to_string());
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(const FieldCtx& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldCtx& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldCtx& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    std::size_t j = 0;
    for (auto v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const FieldCtx& field,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.front().size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].field() == field)) throw FieldMismatch("entry field differs");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix v(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, c);
  return v;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : data_) n += !s.is_zero();
  return n;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::is_identity() const {
  return is_square() && *this == identity(field_, rows_);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix& a,
                                                                 const Matrix& b) {
  require_same_field(a, b, "compare");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("compare: " + shape(a) + " vs " + shape(b));
  }
  // Column-major scan so the witness is the first failing input basis vector.
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + shape(a) + " * " + shape(b));
  }
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("mat_add: " + shape(a) + " + " + shape(b));
  }
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  return mat_add(a, mat_scale(-Scalar::one(b.field()), b));
}

Matrix mat_scale(const Scalar& s, const Matrix& a) {
  if (!(s.field() == a.field())) throw FieldMismatch("mat_scale");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Matrix mat_inv(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("mat_inv: " + shape(a) + " is not square");
  const std::size_t n = a.rows();
  const FieldCtx& f = a.field();
  // Augmented [A | I]; every row update is (p_k * r_i - a_ik * r_k) / p_prev.
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar::one(f);
  }
  Scalar prev = Scalar::one(f);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && aug(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("mat_inv: matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(k, j), aug(pivot, j));
    }
    const Scalar pk = aug(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar aik = aug(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        aug(i, j) = (pk * aug(i, j) - aik * aug(k, j)) / prev;
      }
    }
    prev = pk;
  }
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar d = aug(i, i).inverse();
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j) * d;
  }
  return inv;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix mat_kernel(const Matrix& a) {
  Matrix r = a;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(a.field(), a.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = Scalar::one(a.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = -r(i, free[j]);
  }
  return k;
}

std::size_t mat_rank(const Matrix& a) {
  Matrix r = a;
  return rref(r).size();
}

Matrix mat_pow(const Matrix& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionMismatch("mat_pow: " + shape(a));
  Matrix result = Matrix::identity(a.field(), a.rows());
  for (unsigned i = 0; i < exponent; ++i) result = mat_mul(result, a);
  return result;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  Matrix c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (bkl.is_zero()) continue;
          c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return c;
}

LinMap LinMap::after(const LinMap& before) const {
  if (before.codomain_dim() != domain_dim()) {
    throw DimensionMismatch("LinMap composition: codomain " +
                            std::to_string(before.codomain_dim()) + " vs domain " +
                            std::to_string(domain_dim()));
  }
  return LinMap(mat_mul(matrix_, before.matrix_));
}

LinMap flip_map(const FieldCtx& field, std::size_t dim_a, std::size_t dim_b) {
  Matrix m(field, dim_b * dim_a, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) m.set(j * dim_a + i, i * dim_b + j, 1);
  return LinMap(std::move(m));
}

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).to_string();
  }
  out << "]";
  return out.str();
}

}  // namespace ydlcat

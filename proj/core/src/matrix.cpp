#include "hopfkit/matrix.hpp"

#include <sstream>
#include <utility>

namespace hopfkit {

Vector zero_vector(FieldSpec f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

bool is_zero_vector(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_scalar_rows(FieldSpec f, const std::vector<Vector>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) {
      if (!(rows[i][j].field() == f)) throw FieldMismatch("matrix entry outside " + f.to_string());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  if (v.empty()) return Matrix();
  Matrix m(v.front().field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::select_cols(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : data_) n += s.is_zero() ? 0 : 1;
  return n;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::scale(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  if (s.is_zero()) return;
  const bool unit = s.is_one();
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (o.data_[i].is_zero()) continue;
    if (unit)
      data_[i] += o.data_[i];
    else
      data_[i].add_product(s, o.data_[i]);
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product field mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j).add_product(aik, bkj);
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (v[k].is_zero() || a(i, k).is_zero()) continue;
      out[i].add_product(a(i, k), v[k]);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a.empty() || a.field_ == b.field_) && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t rows = blocks.front().rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(blocks.front().field(), rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c0, b);
    c0 += b.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(blocks.front().field(), rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, 0, b);
    r0 += b.rows();
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  FieldSpec f = a.rows() || a.cols() ? a.field() : b.field();
  Matrix out(f, a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix power(const Matrix& m, std::size_t e) {
  if (m.rows() != m.cols()) throw DimensionMismatch("power of non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("kronecker field mismatch");
  const std::size_t br = b.rows(), bc = b.cols();
  Matrix out(a.field(), a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t r = 0; r < br; ++r)
        for (std::size_t c = 0; c < bc; ++c) {
          const Scalar& brc = b(r, c);
          if (brc.is_zero()) continue;
          out(i * br + r, j * bc + c) = aij * brc;
        }
    }
  return out;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m(p, c).is_zero()) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t k = c; k < nc; ++k) std::swap(m(p, k), m(r, k));
    const Scalar inv = m(r, c).inverse();
    if (!inv.is_one())
      for (std::size_t k = c; k < nc; ++k)
        if (!m(r, k).is_zero()) m(r, k) *= inv;
    std::vector<std::size_t> support;
    for (std::size_t k = c; k < nc; ++k)
      if (!m(r, k).is_zero()) support.push_back(k);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = -m(i, c);
      for (std::size_t k : support) m(i, k).add_product(f, m(r, k));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

namespace {

std::size_t bareiss_rank(Matrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  Scalar prev = Scalar::one(m.field());
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m(p, c).is_zero()) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t k = c; k < nc; ++k) std::swap(m(p, k), m(r, k));
    const Scalar pivot = m(r, c);
    const Scalar prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < nr; ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t k = c + 1; k < nc; ++k) {
        Scalar v = pivot * m(i, k);
        if (!lead.is_zero() && !m(r, k).is_zero()) v -= lead * m(r, k);
        if (!prev_inv.is_one() && !v.is_zero()) v *= prev_inv;
        m(i, k) = std::move(v);
      }
      m(i, c) = Scalar::zero(m.field());
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  if (m.field().characteristic() == 0 && m.rows() <= 64 && m.cols() <= 64) return bareiss_rank(m);
  return row_reduce(m).rank();
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.field());
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = -(a(i, c) * inv);
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero()) a(i, k).add_product(f, a(c, k));
    }
  }
  return det;
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t nc = m.cols();
  const FieldSpec f = m.field();
  if (m.rows() == 0) return Matrix::identity(f, nc);
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, nc, free_cols.size());
  const Scalar one = Scalar::one(f);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    k(fc, j) = one;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Scalar& v = e.reduced(i, fc);
      if (!v.is_zero()) k(e.pivots[i], j) = -v;
    }
  }
  return k;
}

Matrix column_space(const Matrix& m) {
  if (m.empty()) return Matrix(m.field(), m.rows(), 0);
  RowEchelon e = row_reduce(m);
  return m.select_cols(e.pivots);
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: A and b row counts differ");
  if (a.rows() && b.cols() && !(a.field() == b.field())) throw FieldMismatch("solve_linear field mismatch");
  const FieldSpec f = a.field();
  const std::size_t n = a.cols();
  RowEchelon e = row_reduce(hstack({a, b}));
  Matrix x(f, n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t k = 0; k < b.cols(); ++k) x(e.pivots[i], k) = e.reduced(i, n + k);
  }
  LinearSolution sol{std::move(x), {}};
  Matrix ker = kernel_basis(a.rows() ? a : Matrix(f, 0, n));
  for (std::size_t j = 0; j < ker.cols(); ++j) sol.kernel.push_back(ker.block(0, j, n, 1));
  return sol;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon e = row_reduce(hstack({m, Matrix::identity(m.field(), n)}));
  if (e.rank() < n || e.pivots[n - 1] >= n) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix left_inverse(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (c == 0) return Matrix(m.field(), 0, r);
  RowEchelon e = row_reduce(hstack({m, Matrix::identity(m.field(), r)}));
  if (e.rank() < c || e.pivots[c - 1] >= c) throw Error("left_inverse: matrix lacks full column rank");
  return e.reduced.block(0, c, c, r);
}

}  // namespace hopfkit

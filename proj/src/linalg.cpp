#include "operadkit/linalg.hpp"

#include <sstream>
#include <utility>

#include "operadkit/errors.hpp"

namespace operadkit {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t k) {
  Vector v = zero_vector(field, n);
  v.at(k) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(const Scalar& a, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) y[k] += a * x[k];
  }
}

Vector scaled(const Scalar& a, Vector v) {
  for (auto& s : v) s *= a;
  return v;
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k];
  }
  os << ']';
  return os.str();
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  if (a.field_ != b.field_) throw FieldMismatch("matrix product: fields differ");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
  Vector y = zero_vector(a.field_, a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const auto& aik = a(i, k);
      if (!aik.is_zero()) y[i] += aik * x[k];
    }
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("stack: column counts differ");
  Matrix r(top.field_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), r.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            r.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead_row, c));
    }
    const Scalar inv = a(lead_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(lead_row, c).is_zero()) a(r, c) -= factor * a(lead_row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++lead_row;
  }
  out.rank = lead_row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  const auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivot_columns[n - 1] >= n)) {
    throw DimensionMismatch("matrix is singular");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return r;
}

namespace {

Matrix canonical_rows(const Matrix& m) {
  const auto red = rref(m);
  Matrix out(m.field(), red.rank, m.cols());
  for (std::size_t r = 0; r < red.rank; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = red.reduced(r, c);
  }
  return out;
}

}  // namespace

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient));
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  return Subspace(Matrix::identity(field, ambient));
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(field, ambient);
  return Subspace(canonical_rows(Matrix::from_rows(field, ambient, vectors)));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("subspace membership: ambient dimension mismatch");
  // Canonical rows are in RREF: the coordinate on row r is v at its pivot.
  Vector coords(dim());
  Vector residual = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot).is_zero()) ++pivot;
    coords[r] = residual[pivot];
    if (!coords[r].is_zero()) axpy(-coords[r], basis_.row(r), residual);
  }
  if (!operadkit::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_vectors()) {
    if (!contains(v)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

Subspace kernel(const Matrix& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivot_columns[r]] = -red.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace image(const Matrix& m) {
  return Subspace::span(m.field(), m.rows(), m.transpose().row_vectors());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.field(), u.ambient_dim());
  // Solve a^T U = b^T V via the kernel of [U^T | -V^T].
  const std::size_t n = u.ambient_dim();
  Matrix system(u.field(), n, u.dim() + v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) system(c, r) = u.basis()(r, c);
  }
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) system(c, u.dim() + r) = -v.basis()(r, c);
  }
  std::vector<Vector> vecs;
  for (const auto& k : kernel(system).basis_vectors()) {
    Vector w = zero_vector(u.field(), n);
    for (std::size_t r = 0; r < u.dim(); ++r) axpy(k[r], u.basis().row(r), w);
    vecs.push_back(std::move(w));
  }
  return Subspace::span(u.field(), n, vecs);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  auto vecs = u.basis_vectors();
  for (auto& w : v.basis_vectors()) vecs.push_back(std::move(w));
  return Subspace::span(u.field(), u.ambient_dim(), vecs);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_columns[r]] = red.reduced(r, m.cols());
  return x;
}

}  // namespace operadkit

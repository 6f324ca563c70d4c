#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "operadkit/scalar.hpp"

namespace operadkit {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
/// y += a * x
void axpy(const Scalar& a, const Vector& x, Vector& y);
Vector scaled(const Scalar& a, Vector v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over a runtime field. Linear maps act on column
/// vectors: y = M x.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Vertical concatenation; column counts must agree.
  static Matrix stack(const Matrix& top, const Matrix& bottom);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; throws DimensionMismatch when singular.
Matrix inverse(const Matrix& m);
/// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// A subspace of F^n stored by its canonical basis: the nonzero rows of the
/// reduced row echelon form. Two subspaces are equal iff their canonical
/// matrices are equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&);

 private:
  explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}
  Matrix basis_;
};

/// {x : M x = 0}
Subspace kernel(const Matrix& m);
/// Column space of M.
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// Some x with M x = b, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace operadkit

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "catloc/scalar.hpp"

namespace catloc {

/// Raised on incompatible shapes (matrix sizes, morphism endpoints, ...).
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
bool is_zero_vector(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool is_zero() const;

  /// Throws FieldMismatch if some entry is not over field().
  void check_field() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivots[k] is the pivot column of row k.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}; one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
/// Basis of the column space, as a subset of the columns of m.
std::vector<Vector> column_space_basis(const Matrix& m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of k^n with a deterministic complement of standard basis vectors.
///
/// The subspace is kept in reduced row echelon form. Coordinates of a vector
/// modulo the subspace are its entries at the non-pivot positions after
/// clearing the pivot positions.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);
  Subspace(Field field, std::size_t ambient, const std::vector<Vector>& spanning);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  std::size_t codim() const { return ambient_ - pivots_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& complement() const { return complement_; }

  bool contains(std::span<const Scalar> v) const;
  /// v with every pivot entry cleared by subtracting subspace vectors.
  Vector reduce(std::span<const Scalar> v) const;
  /// Coordinates of v + subspace in the complement basis.
  Vector quotient_coords(std::span<const Scalar> v) const;
  /// Representative of the class with the given complement coordinates.
  Vector lift(std::span<const Scalar> coords) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;  // rref rows
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> complement_;
};

}  // namespace catloc

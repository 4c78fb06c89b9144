#include "catloc/matrix.hpp"

#include <algorithm>

#include "catloc/simd/fp_kernels.hpp"

namespace catloc {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  if (!(field_ == o.field_)) throw FieldMismatch("matrix product over different fields");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

bool Matrix::is_zero() const { return is_zero_vector(data_); }

void Matrix::check_field() const {
  for (const auto& s : data_)
    if (!(s.field() == field_)) throw FieldMismatch("matrix entry over " + s.field().to_string() +
                                                    " in a matrix over " + field_.to_string());
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

Echelon rref_prime(const Matrix& m) {
  const std::uint32_t p = m.field().modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue();

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + lead * cols);
    std::uint32_t* prow = a.data() + lead * cols;
    simd::row_scale(prow + c, fp::inv(prow[c], p), p, cols - c);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      std::uint32_t f = a[r * cols + c];
      if (f != 0) simd::row_submul(a.data() + r * cols + c, prow + c, f, p, cols - c);
    }
    pivots.push_back(c);
    ++lead;
  }

  Matrix out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (a[r * cols + c] != 0) out(r, c) = Scalar(Residue{a[r * cols + c], p});
  return {std::move(out), std::move(pivots)};
}

Echelon rref_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpq_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).rational();

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + lead * cols);
    mpq_class inv = 1 / a[lead * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[lead * cols + j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      mpq_class f = a[r * cols + c];
      if (sgn(f) == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[lead * cols + j]) != 0) a[r * cols + j] -= f * a[lead * cols + j];
    }
    pivots.push_back(c);
    ++lead;
  }

  Matrix out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(a[r * cols + c]) != 0) out(r, c) = Scalar(a[r * cols + c]);
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Echelon rref(const Matrix& m) {
  m.check_field();
  return m.field().is_prime() ? rref_prime(m) : rref_rational(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length does not match row count");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<Vector> out;
  for (auto p : e.pivots) out.push_back(m.column(p));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Subspace::Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {
  for (std::size_t i = 0; i < ambient; ++i) complement_.push_back(i);
}

Subspace::Subspace(Field field, std::size_t ambient, const std::vector<Vector>& spanning)
    : field_(field), ambient_(ambient) {
  if (!spanning.empty()) {
    Echelon e = rref(Matrix::from_rows(field, ambient, spanning));
    pivots_ = e.pivots;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      auto r = e.reduced.row(k);
      basis_.emplace_back(r.begin(), r.end());
    }
  }
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t i = 0; i < ambient; ++i)
    if (!is_pivot[i]) complement_.push_back(i);
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw ShapeError("vector length does not match subspace ambient");
  Vector out(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Scalar f = out[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_[k][j].is_zero()) out[j] -= f * basis_[k][j];
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero_vector(reduce(v)); }

Vector Subspace::quotient_coords(std::span<const Scalar> v) const {
  Vector r = reduce(v);
  Vector out;
  out.reserve(complement_.size());
  for (auto c : complement_) out.push_back(r[c]);
  return out;
}

Vector Subspace::lift(std::span<const Scalar> coords) const {
  if (coords.size() != complement_.size()) throw ShapeError("quotient coordinate length mismatch");
  Vector out = zero_vector(field_, ambient_);
  for (std::size_t i = 0; i < complement_.size(); ++i) out[complement_[i]] = coords[i];
  return out;
}

}  // namespace catloc

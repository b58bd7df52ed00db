#include "hopfmod/matrix.hpp"

#include <sstream>

namespace hopfmod {

namespace {

void require_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldError("mixed fields in matrix operation");
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::column(Field field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].field() == field)) throw FieldError("mixed fields in column");
    m.data_[i] = entries[i];
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::unit_vector(Field field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m[i] = Scalar::one(field);
  return m;
}

Matrix Matrix::col(std::size_t c) const {
  Matrix v(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v.data_[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::row(std::size_t r) const {
  Matrix v(field_, 1, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.data_[c] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Matrix& v) {
  if (v.rows_ != rows_ || v.cols_ != 1) throw DimensionError("set_col: expected " + std::to_string(rows_) + "x1");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v.data_[r];
}

Matrix Matrix::cols_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionError("cols_range out of bounds");
  Matrix m(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionError("rows_range out of bounds");
  Matrix m(field_, count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_field(*this, o);
  if (cols_ != o.rows_) throw DimensionError("product of " + shape(*this) + " and " + shape(o));
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) p(i, j) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sum of " + shape(*this) + " and " + shape(o));
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix n = *this;
  for (auto& x : n.data_) x *= s;
  return n;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

Matrix Matrix::vectorized() const {
  Matrix v(field_, rows_ * cols_, 1);
  v.data_ = data_;
  return v;
}

Matrix Matrix::unvectorize(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows_ * v.cols_ != rows * cols) throw DimensionError("unvectorize: size mismatch");
  Matrix m(v.field_, rows, cols);
  m.data_ = v.data_;
  return m;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).to_string();
  return out;
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

Matrix hcat(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.rows() != b.rows()) throw DimensionError("hcat: row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.cols() != b.cols()) throw DimensionError("vcat: column mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

Matrix hcat(const std::vector<Matrix>& blocks, Field field, std::size_t rows) {
  Matrix m(field, rows, 0);
  for (const auto& b : blocks) m = hcat(m, b);
  return m;
}

Matrix vcat(const std::vector<Matrix>& blocks, Field field, std::size_t cols) {
  Matrix m(field, 0, cols);
  for (const auto& b : blocks) m = vcat(m, b);
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const Scalar& y = b(p, q);
          if (!y.is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * y;
        }
    }
  return k;
}

Matrix tensor_permutation(Field field, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& order) {
  const std::size_t n = dims.size();
  if (order.size() != n) throw DimensionError("tensor_permutation: order length mismatch");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> out_dims(n);
  for (std::size_t t = 0; t < n; ++t) out_dims[t] = dims[order[t]];
  Matrix p(field, total, total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rem = src;
    for (std::size_t f = n; f-- > 0;) {
      idx[f] = rem % dims[f];
      rem /= dims[f];
    }
    std::size_t dst = 0;
    for (std::size_t t = 0; t < n; ++t) dst = dst * out_dims[t] + idx[order[t]];
    p(dst, src) = Scalar::one(field);
  }
  return p;
}

}  // namespace hopfmod

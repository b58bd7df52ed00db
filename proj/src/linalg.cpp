#include "hopfmod/linalg.hpp"

#include <numeric>

namespace hopfmod {

namespace {

// Fraction-free forward elimination on an integer matrix; rows are swapped in place and
// the pivot columns recorded. Every intermediate entry is a minor of the input, so the
// division by the previous pivot is exact.
std::vector<std::size_t> bareiss_forward(std::vector<std::vector<mpz_class>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    // Rows above r keep their entries; columns skipped earlier stay zero below r.
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon rref_rational(const Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = a(i, j).rational();
      m[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  auto pivots = bareiss_forward(m, cols);
  const Field f = Field::rationals();
  Matrix r(f, rows, cols);
  // Normalise pivot rows and clear above each pivot, bottom-up.
  std::vector<std::vector<mpq_class>> q(pivots.size(), std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& lead = m[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      q[i][j] = mpq_class(m[i][j], lead);
      q[i][j].canonicalize();
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      const mpq_class factor = q[k][pivots[i]];
      if (factor == 0) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) q[k][j] -= factor * q[i][j];
    }
  }
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = Scalar::from_rational(f, q[i][j]);
  return {std::move(r), std::move(pivots)};
}

Echelon rref_modular(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(const Matrix& a) {
  return a.field().is_rational() ? rref_rational(a) : rref_modular(a);
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Matrix kernel_basis(const Matrix& a) {
  const Echelon e = row_reduce(a);
  const Field f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(f, a.cols(), free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k(free[t], t) = Scalar::one(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], t) = -e.rref(i, free[t]);
  }
  return k;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows())
    throw DimensionError("solve_linear: rhs must be " + std::to_string(a.rows()) + "x1");
  if (!(a.field() == b.field())) throw FieldError("solve_linear: mixed fields");
  const Echelon e = row_reduce(hcat(a, b));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), 1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, a.cols());
  return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw DimensionError("solve_matrix: row mismatch");
  if (!(a.field() == b.field())) throw FieldError("solve_matrix: mixed fields");
  const Echelon e = row_reduce(hcat(a, b));
  std::size_t lhs_rank = 0;
  while (lhs_rank < e.pivots.size() && e.pivots[lhs_rank] < a.cols()) ++lhs_rank;
  if (lhs_rank != e.pivots.size()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < lhs_rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.rref(i, a.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_matrix(a, Matrix::identity(a.field(), a.rows()));
}

Matrix image_basis(const Matrix& a) { return a.select_cols(row_reduce(a).pivots); }

Matrix power(const Matrix& a, std::size_t e) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix");
  Matrix r = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

std::vector<Scalar> minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("minimal_polynomial of non-square matrix");
  const Field f = a.field();
  // Krylov sequence of matrix powers, flattened; the first dependency is the minimal polynomial.
  std::vector<Matrix> powers{Matrix::identity(f, a.rows()).vectorized()};
  Matrix current = Matrix::identity(f, a.rows());
  for (std::size_t d = 1; d <= a.rows(); ++d) {
    current = current * a;
    const Matrix target = current.vectorized();
    const Matrix basis = hcat(powers, f, target.rows());
    if (auto c = solve_linear(basis, target)) {
      std::vector<Scalar> poly;
      for (std::size_t i = 0; i < d; ++i) poly.push_back(-(*c)[i]);
      poly.push_back(Scalar::one(f));
      return poly;
    }
    powers.push_back(target);
  }
  // Cayley-Hamilton guarantees termination by degree n; the 0x0 matrix has polynomial 1.
  return {Scalar::one(f)};
}

Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& a) {
  Matrix r(a.field(), a.rows(), a.cols());
  for (std::size_t i = coeffs.size(); i-- > 0;)
    r = r * a + Matrix::identity(a.field(), a.rows()).scaled(coeffs[i]);
  return r;
}

}  // namespace hopfmod

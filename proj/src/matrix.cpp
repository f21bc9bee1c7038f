#include "homlong/matrix.hpp"

#include <string>

#include "homlong/error.hpp"

namespace homlong {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (cols != 0 && rows > kMaxEntries / cols)
    throw Error(ErrorKind::TooLarge, std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the dense limit");
  entries_.resize(rows * cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.dim(), 1, v.entries()); }

Matrix Matrix::row(const Vector& v) { return Matrix(1, v.dim(), v.entries()); }

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.dim(), d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::col_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row_vector(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(rows_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "cannot compose " + shape(a) + " with " + shape(b));
  Matrix c(a.rows(), b.cols());
  // Most structure maps are very sparse; skip zero entries on both sides.
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    nz.clear();
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(k, j).is_zero()) nz.push_back(j);
    if (nz.empty()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j : nz) c(i, j).add_product(x, b(k, j));
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "cannot add " + shape(a) + " and " + shape(b));
  std::vector<Scalar> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
  std::vector<Scalar> e(a.entries());
  for (auto& x : e) x *= s;
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) out[i].add_product(a(i, j), v[j]);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
    }
  return k;
}

namespace {

// Reduce [a | rhs] to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, Matrix& rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(p, j), rhs(row, j));
    }
    Scalar inv = Scalar(1) / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        if (!rhs(row, j).is_zero()) rhs(r, j) -= f * rhs(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix invert(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "invert needs a square matrix, got " + shape(a));
  Matrix work = a;
  Matrix inv = Matrix::identity(a.rows());
  auto pivots = rref(work, inv);
  if (pivots.size() != a.rows()) throw Error(ErrorKind::SingularMatrix, "matrix of shape " + shape(a) + " is singular");
  return inv;
}

Matrix power(const Matrix& a, int k) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "power needs a square matrix");
  Matrix base = k < 0 ? invert(a) : a;
  unsigned n = k < 0 ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
  Matrix result = Matrix::identity(a.rows());
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant needs a square matrix");
  Matrix m = a;
  Scalar det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& a) {
  Matrix work = a;
  Matrix none(a.rows(), 0);
  return rref(work, none).size();
}

Matrix permute_legs(std::span<const std::size_t> dims, std::span<const std::size_t> order) {
  const std::size_t r = dims.size();
  if (order.size() != r) throw Error(ErrorKind::DimensionMismatch, "leg permutation arity");
  std::vector<bool> seen(r, false);
  for (auto o : order) {
    if (o >= r || seen[o]) throw Error(ErrorKind::DimensionMismatch, "not a permutation of legs");
    seen[o] = true;
  }
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> out_dims(r);
  for (std::size_t t = 0; t < r; ++t) out_dims[t] = dims[order[t]];
  Matrix p(total, total);
  std::vector<std::size_t> out_idx(r);
  for (std::size_t c = 0; c < total; ++c) {
    auto in_idx = unflatten(c, dims);
    for (std::size_t t = 0; t < r; ++t) out_idx[t] = in_idx[order[t]];
    p(flatten(out_idx, out_dims), c) = Scalar(1);
  }
  return p;
}

Matrix permute_legs(std::initializer_list<std::size_t> dims, std::initializer_list<std::size_t> order) {
  return permute_legs(std::span<const std::size_t>(dims.begin(), dims.size()),
                      std::span<const std::size_t>(order.begin(), order.size()));
}

Matrix flip(std::size_t d1, std::size_t d2) { return permute_legs({d1, d2}, {1, 0}); }

std::optional<LinearSolution> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  Matrix work = a;
  Matrix rhs = Matrix::column(b);
  auto pivots = rref(work, rhs);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (!rhs(r, 0).is_zero()) return std::nullopt;
  LinearSolution sol{Vector(a.cols()), a.cols() - pivots.size()};
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.x[pivots[i]] = rhs(i, 0);
  return sol;
}

std::optional<std::size_t> first_differing_column(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "comparing " + shape(a) + " with " + shape(b));
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return c;
  return std::nullopt;
}

std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    idx[t] = index % dims[t];
    index /= dims[t];
  }
  return idx;
}

std::size_t flatten(std::span<const std::size_t> idx, std::span<const std::size_t> dims) {
  std::size_t flat = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) flat = flat * dims[t] + idx[t];
  return flat;
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, std::vector<Scalar> entries)
    : d0_(d0), d1_(d1), d2_(d2), entries_(std::move(entries)) {
  if (entries_.size() != d0 * d1 * d2)
    throw Error(ErrorKind::DimensionMismatch, "tensor entry count does not match shape");
}

Tensor3 apply3(const Tensor3& t, int mode, const Matrix& m) {
  if (mode < 0 || mode > 2) throw Error(ErrorKind::DimensionMismatch, "apply3 mode must be 0, 1 or 2");
  if (m.cols() != t.dim(mode))
    throw Error(ErrorKind::DimensionMismatch, "apply3: matrix columns do not match tensor leg");
  std::size_t d[3] = {t.d0(), t.d1(), t.d2()};
  d[mode] = m.rows();
  Tensor3 out(d[0], d[1], d[2]);
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k) {
        const Scalar& x = t(i, j, k);
        if (x.is_zero()) continue;
        std::size_t src = mode == 0 ? i : (mode == 1 ? j : k);
        for (std::size_t a = 0; a < m.rows(); ++a) {
          if (m(a, src).is_zero()) continue;
          std::size_t ii = mode == 0 ? a : i, jj = mode == 1 ? a : j, kk = mode == 2 ? a : k;
          out(ii, jj, kk).add_product(m(a, src), x);
        }
      }
  return out;
}

Matrix binary_map(const Tensor3& t) {
  Matrix m(t.d2(), t.d0() * t.d1());
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k) m(k, i * t.d1() + j) = t(i, j, k);
  return m;
}

Tensor3 binary_tensor(const Matrix& m, std::size_t d0, std::size_t d1) {
  if (m.cols() != d0 * d1) throw Error(ErrorKind::DimensionMismatch, "binary_tensor: column count");
  Tensor3 t(d0, d1, m.rows());
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < m.rows(); ++k) t(i, j, k) = m(k, i * d1 + j);
  return t;
}

Matrix split_map(const Tensor3& t) {
  Matrix m(t.d1() * t.d2(), t.d0());
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k) m(j * t.d2() + k, i) = t(i, j, k);
  return m;
}

Tensor3 split_tensor(const Matrix& m, std::size_t d1, std::size_t d2) {
  if (m.rows() != d1 * d2) throw Error(ErrorKind::DimensionMismatch, "split_tensor: row count");
  Tensor3 t(m.cols(), d1, d2);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k) t(i, j, k) = m(j * d2 + k, i);
  return t;
}

}  // namespace homlong

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homlong/scalar.hpp"

namespace homlong {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  Vector(std::initializer_list<Scalar> xs) : entries_(xs) {}
  explicit Vector(std::vector<Scalar> xs) : entries_(std::move(xs)) {}

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

// Dense row-major matrix. As a linear map it acts on column vectors, so
// column j holds the coordinates of the image of basis vector j.
class Matrix {
 public:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 25;

  Matrix() = default;
  // Throws TooLarge past kMaxEntries.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  static Matrix column(const Vector& v);  // k -> V, 1 |-> v
  static Matrix row(const Vector& v);     // V -> k
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Vector col_vector(std::size_t c) const;
  Vector row_vector(std::size_t r) const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

Matrix transpose(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
template <class... Ms>
Matrix kron(const Matrix& a, const Matrix& b, const Ms&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return kron(a, b);
  } else {
    return kron(kron(a, b), rest...);
  }
}
Matrix invert(const Matrix& a);
Matrix power(const Matrix& a, int k);
Scalar determinant(const Matrix& a);
std::size_t rank(const Matrix& a);

// compose(f1, f2, ..., fn) = f1 ∘ f2 ∘ ... ∘ fn, evaluated from the right.
inline Matrix compose(const Matrix& a) { return a; }
template <class... Ms>
Matrix compose(const Matrix& a, const Matrix& b, const Ms&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return a * b;
  } else {
    return a * compose(b, rest...);
  }
}

// Matrix of the leg permutation V_0 ⊗ ... ⊗ V_{r-1} -> V_{order[0]} ⊗ ... ⊗ V_{order[r-1]}:
// output leg t carries input leg order[t].
Matrix permute_legs(std::span<const std::size_t> dims, std::span<const std::size_t> order);
Matrix permute_legs(std::initializer_list<std::size_t> dims, std::initializer_list<std::size_t> order);
Matrix flip(std::size_t d1, std::size_t d2);

// Exact solution of A x = b. Returns nullopt when inconsistent; otherwise a
// particular solution together with the dimension of the solution space.
struct LinearSolution {
  Vector x;
  std::size_t nullity = 0;
};
std::optional<LinearSolution> solve(const Matrix& a, const Vector& b);

// First column (in increasing order) where two equal-shape matrices differ.
std::optional<std::size_t> first_differing_column(const Matrix& a, const Matrix& b);

// Mixed-radix decoding of a flat tensor index into per-leg indices.
std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims);
std::size_t flatten(std::span<const std::size_t> idx, std::span<const std::size_t> dims);

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), entries_(d0 * d1 * d2) {}
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, std::vector<Scalar> entries);

  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t dim(int mode) const { return mode == 0 ? d0_ : (mode == 1 ? d1_ : d2_); }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * d1_ + j) * d2_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * d1_ + j) * d2_ + k];
  }
  const std::vector<Scalar>& entries() const { return entries_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> entries_;
};

// Contract M into T along one index position: T'[..a..] = Σ_b M(a,b) T[..b..].
Tensor3 apply3(const Tensor3& t, int mode, const Matrix& m);

// T[i][j][k] = coefficient of e_k in f(e_i ⊗ e_j)  <->  matrix d2 × (d0·d1).
Matrix binary_map(const Tensor3& t);
Tensor3 binary_tensor(const Matrix& m, std::size_t d0, std::size_t d1);
// T[i][j][k] = coefficient of e_j ⊗ e_k in f(e_i)  <->  matrix (d1·d2) × d0.
Matrix split_map(const Tensor3& t);
Tensor3 split_tensor(const Matrix& m, std::size_t d1, std::size_t d2);

}  // namespace homlong

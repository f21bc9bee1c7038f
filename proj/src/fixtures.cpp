#include "homlong/fixtures.hpp"

namespace homlong::fixtures {

HomBialgebra ground() {
  HomBialgebra k;
  k.dim = 1;
  k.mult = Matrix::identity(1);
  k.unit = Vector{1};
  k.comult = Matrix::identity(1);
  k.counit = Vector{1};
  k.twist = Matrix::identity(1);
  k.antipode = Matrix::identity(1);
  k.basis = {"1"};
  return k;
}

HomBialgebra cyclic_group(std::size_t n) {
  HomBialgebra h;
  h.dim = n;
  h.mult = Matrix(n, n * n);
  h.comult = Matrix(n * n, n);
  h.unit = Vector(n);
  h.unit[0] = 1;
  h.counit = Vector(std::vector<Scalar>(n, Scalar(1)));
  h.twist = Matrix::identity(n);
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.mult((a + b) % n, a * n + b) = 1;
    h.comult(a * n + a, a) = 1;
    s((n - a) % n, a) = 1;
    h.basis.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g" + std::to_string(a)));
  }
  h.antipode = s;
  return h;
}

Matrix cyclic_power_map(std::size_t n, std::size_t m) {
  Matrix p(n, n);
  for (std::size_t a = 0; a < n; ++a) p((a * m) % n, a) = 1;
  return p;
}

HomBialgebra sweedler() {
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  HomBialgebra h;
  h.dim = 4;
  h.basis = {"1", "g", "x", "gx"};
  h.mult = Matrix(4, 16);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int c) { h.mult(k, i * 4 + j) = c; };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  h.unit = Vector{1, 0, 0, 0};
  h.counit = Vector{1, 1, 0, 0};
  h.comult = Matrix(16, 4);
  auto cset = [&](std::size_t i, std::size_t j, std::size_t k, int c) { h.comult(j * 4 + k, i) = c; };
  cset(0, 0, 0, 1);
  cset(1, 1, 1, 1);
  cset(2, 2, 0, 1);  // Δx = x⊗1 + g⊗x
  cset(2, 1, 2, 1);
  cset(3, 3, 1, 1);  // Δ(gx) = gx⊗g + 1⊗gx
  cset(3, 0, 3, 1);
  h.twist = Matrix::identity(4);
  h.antipode = Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  return h;
}

Matrix sweedler_scaling(const Scalar& lambda) { return Matrix::diagonal(Vector{1, 1, lambda, lambda}); }

HomBialgebra twisted_z4() { return yau_twist(cyclic_group(4), cyclic_power_map(4, 3)); }

HomBialgebra twisted_sweedler(const Scalar& lambda) { return yau_twist(sweedler(), sweedler_scaling(lambda)); }

HomBialgebra klein() { return tensor_hopf(cyclic_group(2), cyclic_group(2)); }

Matrix r_trivial(const HomBialgebra& h) {
  return element_from_column(kron(Matrix::column(h.unit), Matrix::column(h.unit)), h.dim);
}

Matrix r_z2() {
  Scalar half(1, 2);
  return Matrix{{half, half}, {half, -half}};
}

Matrix r_z4() {
  Scalar half(1, 2);
  Matrix r(4, 4);
  r(0, 0) = half;
  r(0, 2) = half;
  r(2, 0) = half;
  r(2, 2) = -half;
  return r;
}

Matrix r_sweedler(const Scalar& lambda) {
  Scalar half(1, 2);
  Scalar l = lambda * half;
  Matrix r(4, 4);
  r(0, 0) = half;
  r(0, 1) = half;
  r(1, 0) = half;
  r(1, 1) = -half;
  r(2, 2) = l;
  r(2, 3) = -l;
  r(3, 2) = l;
  r(3, 3) = l;
  return r;
}

Matrix r_klein_mixed() {
  const Matrix rt = r_z2();
  Matrix r(4, 4);
  // (a1,a2) -> 2·a1 + a2; R¹ lives in the first factor, R² in the second.
  for (std::size_t a1 = 0; a1 < 2; ++a1)
    for (std::size_t b2 = 0; b2 < 2; ++b2) r(2 * a1, b2) = rt(a1, b2);
  return r;
}

Matrix form_trivial(const HomBialgebra& b) {
  return transpose(Matrix::row(b.counit)) * Matrix::row(b.counit);
}

Matrix form_z2() { return Matrix{{1, 1}, {1, -1}}; }

Matrix form_z4() {
  Matrix f(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) f(a, b) = ((a * b) % 2 == 0) ? 1 : -1;
  return f;
}

Matrix form_klein_mixed() {
  Matrix f(4, 4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      std::size_t a1 = x / 2, b2 = y % 2;
      f(x, y) = (a1 * b2 == 1) ? -1 : 1;
    }
  return f;
}

HomLongDimodule sign_dimodule(const Scalar& c) {
  const AlgebraRef z2 = share(cyclic_group(2));
  HomLongDimodule m;
  m.H = z2;
  m.B = z2;
  m.dim = 1;
  m.action = Matrix{{c, -c}};
  m.coaction = Matrix{{0}, {c}};
  m.mu = Matrix{{c}};
  m.basis = {"v"};
  return m;
}

HomModule sign_module() { return {1, Matrix{{1, -1}}, Matrix::identity(1), {"v"}}; }

HomComodule sign_comodule() { return {1, Matrix{{0}, {1}}, Matrix::identity(1), {"v"}}; }

}  // namespace homlong::fixtures

#include "homlong/algebra.hpp"

#include "homlong/error.hpp"

namespace homlong {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

void shape_square(const Matrix& m, std::size_t d, const std::string& name) {
  require(m.rows() == d && m.cols() == d, name + " must be " + std::to_string(d) + "x" + std::to_string(d));
}

// On failure the witness is the first basis vector whose image lies in the
// span of the earlier images.
AxiomCheck invertibility(std::string id, const Matrix& m) {
  if (!determinant(m).is_zero()) return {std::move(id), true, {}, "", false};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Matrix head(m.rows(), j);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < j; ++c) head(r, c) = m(r, c);
    auto sol = j == 0 ? std::optional<LinearSolution>() : solve(head, m.col_vector(j));
    if (j == 0 ? m.col_vector(0) == Vector(m.rows()) : sol.has_value()) {
      std::string detail = "determinant is 0; image of basis vector " + std::to_string(j) + " = ";
      if (j == 0) {
        detail += "0";
      } else {
        for (std::size_t c = 0; c < j; ++c) detail += (c ? " + " : "") + sol->x[c].str() + "·col" + std::to_string(c);
      }
      return {std::move(id), false, {j}, detail, false};
    }
  }
  return {std::move(id), false, {}, "determinant is 0", false};
}

AxiomCheck both(std::string id, AxiomCheck first, AxiomCheck second) {
  AxiomCheck& bad = first.passed ? second : first;
  bad.id = std::move(id);
  return bad;
}

}  // namespace

const Matrix& HomBialgebra::S() const {
  if (!antipode) throw Error(ErrorKind::MissingAntipode, "structure has no antipode");
  return *antipode;
}

std::vector<std::string> default_basis(const std::string& stem, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

void check_shape(const HomAlgebra& a) {
  const std::size_t d = a.dim;
  require(a.mult.rows() == d && a.mult.cols() == d * d, "mult must be dim x dim^2");
  require(a.unit.dim() == d, "unit must have length dim");
  shape_square(a.twist, d, "twist");
}

void check_shape(const HomCoalgebra& c) {
  const std::size_t d = c.dim;
  require(c.comult.rows() == d * d && c.comult.cols() == d, "comult must be dim^2 x dim");
  require(c.counit.dim() == d, "counit must have length dim");
  shape_square(c.twist, d, "twist");
}

void check_shape(const HomBialgebra& h) {
  check_shape(h.algebra());
  check_shape(h.coalgebra());
  if (h.antipode) shape_square(*h.antipode, h.dim, "antipode");
}

AxiomReport validate_hom_algebra(const HomAlgebra& a) {
  check_shape(a);
  const std::size_t d = a.dim;
  const Matrix I = Matrix::identity(d);
  const Matrix u = Matrix::column(a.unit);
  const Matrix& al = a.twist;
  AxiomReport rep;
  rep.add(invertibility("alpha-invertible", al));
  rep.add(compare_maps("HA1-mult", al * a.mult, a.mult * kron(al, al), {d, d}));
  rep.add(compare_maps("HA1-unit", al * u, u, {}));
  rep.add(compare_maps("HA2-assoc", a.mult * kron(al, a.mult), a.mult * kron(a.mult, al), {d, d, d}));
  rep.add(both("HA2-unit", compare_maps("", a.mult * kron(I, u), al, {d}),
               compare_maps("", a.mult * kron(u, I), al, {d})));
  return rep;
}

AxiomReport validate_hom_coalgebra(const HomCoalgebra& c) {
  check_shape(c);
  const std::size_t d = c.dim;
  const Matrix I = Matrix::identity(d);
  const Matrix e = Matrix::row(c.counit);
  const Matrix& be = c.twist;
  AxiomReport rep;
  rep.add(invertibility("beta-invertible", be));
  rep.add(both("HC1", compare_maps("", c.comult * be, kron(be, be) * c.comult, {d}),
               compare_maps("", e * be, e, {d})));
  rep.add(compare_maps("HC2-coassoc", kron(be, c.comult) * c.comult, kron(c.comult, be) * c.comult, {d}));
  rep.add(both("HC2-counit", compare_maps("", kron(e, I) * c.comult, be, {d}),
               compare_maps("", kron(I, e) * c.comult, be, {d})));
  return rep;
}

Matrix tensor_square_mult(const Matrix& mult, std::size_t d) {
  return kron(mult, mult) * permute_legs({d, d, d, d}, {0, 2, 1, 3});
}

Matrix tensor_square_comult(const Matrix& comult, std::size_t d) {
  return permute_legs({d, d, d, d}, {0, 2, 1, 3}) * kron(comult, comult);
}

AxiomReport validate_hom_bialgebra(const HomBialgebra& h) {
  check_shape(h);
  const std::size_t d = h.dim;
  const Matrix u = Matrix::column(h.unit);
  const Matrix e = Matrix::row(h.counit);
  AxiomReport rep;
  rep.add(compare_maps("Delta-mult", h.comult * h.mult,
                       tensor_square_mult(h.mult, d) * kron(h.comult, h.comult), {d, d}));
  rep.add(compare_maps("Delta-unit", h.comult * u, kron(u, u), {}));
  rep.add(compare_maps("eps-mult", e * h.mult, kron(e, e), {d, d}));
  rep.add(compare_maps("eps-unit", e * u, Matrix::identity(1), {}));
  return rep;
}

AxiomReport validate_hom_hopf(const HomBialgebra& h) {
  check_shape(h);
  const std::size_t d = h.dim;
  const Matrix& S = h.S();
  const Matrix I = Matrix::identity(d);
  const Matrix ue = Matrix::column(h.unit) * Matrix::row(h.counit);
  AxiomReport rep;
  rep.add(compare_maps("antipode-left", h.mult * kron(S, I) * h.comult, ue, {d}));
  rep.add(compare_maps("antipode-right", h.mult * kron(I, S) * h.comult, ue, {d}));
  rep.add(compare_maps("antipode-twist", S * h.twist, h.twist * S, {d}));
  bool invertible = true;
  try {
    (void)invert(S);
  } catch (const Error&) {
    invertible = false;
  }
  rep.info("antipode-invertible", invertible);
  return rep;
}

AxiomReport validate_tower(const HomBialgebra& h) {
  AxiomReport rep = validate_hom_algebra(h.algebra());
  const AxiomReport co = validate_hom_coalgebra(h.coalgebra());
  for (const auto& c : co.checks())
    if (c.id != "beta-invertible") rep.add(c);
  rep.append(validate_hom_bialgebra(h));
  if (h.is_hopf()) rep.append(validate_hom_hopf(h));
  return rep;
}

HomBialgebra yau_twist(const HomBialgebra& h, const Matrix& phi) {
  check_shape(h);
  const std::size_t d = h.dim;
  if (!h.twist.is_identity())
    throw Error(ErrorKind::NotAutomorphism, "Yau twist needs a classical base (twist = id)");
  shape_square(phi, d, "phi");
  try {
    (void)invert(phi);
  } catch (const Error&) {
    throw Error(ErrorKind::NotAutomorphism, "phi is not invertible");
  }
  const Matrix u = Matrix::column(h.unit);
  const Matrix e = Matrix::row(h.counit);
  if (phi * h.mult != h.mult * kron(phi, phi))
    throw Error(ErrorKind::NotAutomorphism, "phi∘mult != mult∘(phi⊗phi)");
  if (kron(phi, phi) * h.comult != h.comult * phi)
    throw Error(ErrorKind::NotAutomorphism, "(phi⊗phi)∘Δ != Δ∘phi");
  if (e * phi != e) throw Error(ErrorKind::NotAutomorphism, "ε∘phi != ε");
  if (phi * u != u) throw Error(ErrorKind::NotAutomorphism, "phi(1) != 1");
  if (h.antipode && phi * *h.antipode != *h.antipode * phi)
    throw Error(ErrorKind::NotAutomorphism, "phi does not commute with S");
  HomBialgebra t = h;
  t.mult = phi * h.mult;
  t.comult = h.comult * phi;
  t.twist = phi;
  return t;
}

HomAlgebra opposite_algebra(const HomAlgebra& a) {
  check_shape(a);
  HomAlgebra op = a;
  op.mult = a.mult * flip(a.dim, a.dim);
  return op;
}

HomBialgebra dual_hopf(const HomBialgebra& b) {
  check_shape(b);
  const std::size_t d = b.dim;
  const Matrix bi1 = invert(b.twist);
  const Matrix bi2 = bi1 * bi1;
  HomBialgebra s;
  s.dim = d;
  // (f∗g)(y) = f(β⁻²y₁) g(β⁻²y₂)
  s.mult = transpose(kron(bi2, bi2) * b.comult);
  // Δ(f)(x⊗y) = f(β⁻²(xy))
  s.comult = transpose(bi2 * b.mult);
  s.unit = b.counit;
  s.counit = b.unit;
  s.twist = transpose(bi1);
  if (b.antipode) s.antipode = transpose(*b.antipode);
  for (const auto& n : b.basis) s.basis.push_back(n + "*");
  return s;
}

HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  check_shape(a);
  check_shape(b);
  const std::size_t da = a.dim, db = b.dim;
  HomAlgebra t;
  t.dim = da * db;
  t.mult = kron(a.mult, b.mult) * permute_legs({da, db, da, db}, {0, 2, 1, 3});
  t.unit = kron(Matrix::column(a.unit), Matrix::column(b.unit)).col_vector(0);
  t.twist = kron(a.twist, b.twist);
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) t.basis.push_back(x + "⊗" + y);
  return t;
}

HomBialgebra tensor_hopf(const HomBialgebra& h, const HomBialgebra& b) {
  check_shape(h);
  check_shape(b);
  const std::size_t dh = h.dim, db = b.dim;
  HomAlgebra alg = tensor_algebra(h.algebra(), b.algebra());
  HomBialgebra t;
  t.dim = alg.dim;
  t.mult = alg.mult;
  t.unit = alg.unit;
  t.twist = alg.twist;
  t.basis = alg.basis;
  t.comult = permute_legs({dh, dh, db, db}, {0, 2, 1, 3}) * kron(h.comult, b.comult);
  t.counit = kron(Matrix::row(h.counit), Matrix::row(b.counit)).row_vector(0);
  if (h.antipode && b.antipode) t.antipode = kron(*h.antipode, *b.antipode);
  return t;
}

Matrix element_column(const Matrix& r) {
  return Matrix(r.rows() * r.cols(), 1, r.entries());
}

Matrix element_from_column(const Matrix& col, std::size_t dim) {
  require(col.rows() == dim * dim && col.cols() == 1, "element column has wrong length");
  return Matrix(dim, dim, col.entries());
}

Matrix form_row(const Matrix& form) { return Matrix(1, form.rows() * form.cols(), form.entries()); }

Matrix flip_element(const Matrix& r) { return transpose(r); }

Matrix convolution_inverse(const HomBialgebra& h, const Matrix& r) {
  const std::size_t d = h.dim;
  shape_square(r, d, "R");
  const std::size_t d2 = d * d;
  const Matrix mHH = tensor_square_mult(h.mult, d);
  const Matrix rc = element_column(r);
  const Matrix left = mHH * kron(rc, Matrix::identity(d2));
  const Matrix right = mHH * kron(Matrix::identity(d2), rc);
  Matrix system(2 * d2, d2);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      system(i, j) = left(i, j);
      system(d2 + i, j) = right(i, j);
    }
  const Matrix one = kron(Matrix::column(h.unit), Matrix::column(h.unit));
  Vector rhs(2 * d2);
  for (std::size_t i = 0; i < d2; ++i) rhs[i] = rhs[d2 + i] = one(i, 0);
  auto sol = solve(system, rhs);
  if (!sol) throw Error(ErrorKind::NoInverse, "R has no two-sided inverse in H⊗H");
  if (sol->nullity != 0) throw Error(ErrorKind::NoInverse, "inverse of R is not unique");
  return element_from_column(Matrix::column(sol->x), d);
}

AxiomReport validate_quasitriangular(const HomBialgebra& h, const Matrix& R) {
  check_shape(h);
  const std::size_t d = h.dim;
  shape_square(R, d, "R");
  const Matrix I = Matrix::identity(d);
  const Matrix u = Matrix::column(h.unit);
  const Matrix e = Matrix::row(h.counit);
  const Matrix& g = h.twist;
  const Matrix r = element_column(R);
  const Matrix rr = kron(r, r);  // legs R¹, R², r¹, r²
  const Matrix mHH = tensor_square_mult(h.mult, d);
  AxiomReport rep;
  rep.add(both("QHA1", compare_maps("", kron(e, I) * r, u, {}), compare_maps("", kron(I, e) * r, u, {})));
  rep.add(compare_maps("QHA2", kron(h.comult, g) * r,
                       kron(g, g, h.mult) * permute_legs({d, d, d, d}, {0, 2, 1, 3}) * rr, {}));
  rep.add(compare_maps("QHA3", kron(g, h.comult) * r,
                       kron(h.mult, g, g) * permute_legs({d, d, d, d}, {0, 2, 3, 1}) * rr, {}));
  rep.add(compare_maps("QHA4", mHH * kron(flip(d, d) * h.comult, r), mHH * kron(r, h.comult), {d}));
  rep.add(compare_maps("QHA5", kron(g, g) * r, r, {}));
  try {
    Matrix inv = convolution_inverse(h, R);
    bool tri = inv == flip_element(R);
    rep.info("triangular", tri, tri ? "" : "inverse of R differs from its flip");
  } catch (const Error& err) {
    rep.info("triangular", false, err.what());
  }
  return rep;
}

AxiomReport validate_coquasitriangular(const HomBialgebra& b, const Matrix& form) {
  check_shape(b);
  const std::size_t d = b.dim;
  shape_square(form, d, "form");
  const Matrix I = Matrix::identity(d);
  const Matrix u = Matrix::column(b.unit);
  const Matrix e = Matrix::row(b.counit);
  const Matrix& g = b.twist;
  const Matrix f = form_row(form);
  const Matrix ff = kron(f, f);
  const Matrix dd = kron(b.comult, b.comult);  // legs h₁, h₂, g₁, g₂
  AxiomReport rep;
  rep.add(compare_maps("CHA1", f * kron(b.mult, g),
                       ff * permute_legs({d, d, d, d}, {0, 3, 1, 2}) * kron(g, g, b.comult), {d, d, d}));
  rep.add(compare_maps("CHA2", f * kron(g, b.mult),
                       ff * permute_legs({d, d, d, d}, {0, 2, 1, 3}) * kron(b.comult, g, g), {d, d, d}));
  rep.add(compare_maps("CHA3", kron(f, b.mult) * permute_legs({d, d, d, d}, {0, 2, 3, 1}) * dd,
                       kron(b.mult, f) * permute_legs({d, d, d, d}, {0, 2, 1, 3}) * dd, {d, d}));
  rep.add(both("CHA4", compare_maps("", f * kron(u, I), e, {d}), compare_maps("", f * kron(I, u), e, {d})));
  rep.add(compare_maps("CHA5", f * kron(g, g), f, {d, d}));
  AxiomCheck cot = compare_maps("cotriangular", ff * permute_legs({d, d, d, d}, {0, 2, 3, 1}) * dd, kron(e, e), {d, d});
  cot.informational = true;
  rep.add(cot);
  return rep;
}

QuasiTriangularStructure make_quasitriangular(const HomBialgebra& h, const Matrix& r) {
  QuasiTriangularStructure q{r, false, validate_quasitriangular(h, r)};
  q.triangular = q.report.passed("triangular");
  return q;
}

CoQuasiTriangularStructure make_coquasitriangular(const HomBialgebra& b, const Matrix& form) {
  CoQuasiTriangularStructure c{form, false, validate_coquasitriangular(b, form)};
  c.cotriangular = c.report.passed("cotriangular");
  return c;
}

}  // namespace homlong

#include "homlong/dimodule.hpp"

#include "homlong/error.hpp"

namespace homlong {

namespace {

Matrix assoc_from(const Matrix& mu_u, std::size_t dim_v, const Matrix& mu_w) {
  return kron(invert(mu_u), Matrix::identity(dim_v), mu_w);
}

Matrix delta_row(std::size_t d) {
  Matrix r(1, d * d);
  for (std::size_t i = 0; i < d; ++i) r(0, i * d + i) = 1;
  return r;
}

AxiomCheck summarize(std::string id, const AxiomReport& rep) {
  if (const AxiomCheck* bad = rep.first_failure()) {
    return {std::move(id), false, bad->witness, bad->id + (bad->detail.empty() ? "" : ": " + bad->detail), false};
  }
  return {std::move(id), true, {}, "", false};
}

Matrix invert_antipode(const HomBialgebra& h, const char* which) {
  try {
    return invert(h.S());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MissingAntipode) throw;
    throw Error(ErrorKind::AntipodeNotInvertible, std::string("antipode of ") + which + " is not invertible");
  }
}

}  // namespace

bool same_base(const HomLongDimodule& m, const HomLongDimodule& n) {
  auto eq = [](const AlgebraRef& a, const AlgebraRef& b) { return a == b || (a && b && *a == *b); };
  return eq(m.H, n.H) && eq(m.B, n.B);
}

void require_same_base(const HomLongDimodule& m, const HomLongDimodule& n) {
  if (!same_base(m, n)) throw Error(ErrorKind::MismatchedBase, "dimodules live over different (H, B)");
}

void check_shape(const HomLongDimodule& m) {
  if (!m.H || !m.B) throw Error(ErrorKind::DimensionMismatch, "dimodule without base algebras");
  check_shape(m.H->dim, m.module());
  check_shape(m.B->dim, m.comodule());
}

AxiomReport validate_long_dimodule(const HomLongDimodule& m) {
  check_shape(m);
  const HomBialgebra& H = *m.H;
  const HomBialgebra& B = *m.B;
  AxiomReport rep = validate_hom_module(H.algebra(), m.module());
  rep.append(validate_hom_comodule(B.coalgebra(), m.comodule()));
  const std::size_t dh = H.dim, db = B.dim, n = m.dim;
  const Matrix lhs = m.coaction * m.action;
  const Matrix rhs = compose(kron(B.twist, m.action), permute_legs({dh, db, n}, {1, 0, 2}), kron(H.twist, m.coaction));
  rep.add(compare_maps("long-compat", lhs, rhs, {dh, n}));
  return rep;
}

HomLongDimodule unit_dimodule(AlgebraRef h, AlgebraRef b) {
  HomLongDimodule k;
  k.dim = 1;
  k.action = Matrix::row(h->counit);
  k.coaction = Matrix::column(b->unit);
  k.mu = Matrix::identity(1);
  k.basis = {"1"};
  k.H = std::move(h);
  k.B = std::move(b);
  return k;
}

HomLongDimodule canonical_dimodule(AlgebraRef h, AlgebraRef b) {
  const std::size_t dh = h->dim, db = b->dim;
  HomLongDimodule m;
  m.dim = dh * db;
  m.action = kron(h->mult, b->twist);
  m.coaction = permute_legs({dh, db, db}, {1, 0, 2}) * kron(h->twist, b->comult);
  m.mu = kron(h->twist, b->twist);
  for (const auto& x : h->basis)
    for (const auto& y : b->basis) m.basis.push_back(x + "⊗" + y);
  m.H = std::move(h);
  m.B = std::move(b);
  return m;
}

HomLongDimodule tensor_dimodule(const HomLongDimodule& m, const HomLongDimodule& n) {
  require_same_base(m, n);
  check_shape(m);
  check_shape(n);
  const HomBialgebra& H = *m.H;
  const HomBialgebra& B = *m.B;
  const std::size_t dh = H.dim, db = B.dim, dm = m.dim, dn = n.dim;
  HomLongDimodule t;
  t.H = m.H;
  t.B = m.B;
  t.dim = dm * dn;
  t.action = compose(kron(m.action, n.action), permute_legs({dh, dh, dm, dn}, {0, 2, 1, 3}),
                     kron(H.comult, Matrix::identity(dm * dn)));
  t.coaction = compose(kron(power(B.twist, -2) * B.mult, Matrix::identity(dm * dn)),
                       permute_legs({db, dm, db, dn}, {0, 2, 1, 3}), kron(m.coaction, n.coaction));
  t.mu = kron(m.mu, n.mu);
  for (const auto& x : m.basis)
    for (const auto& y : n.basis) t.basis.push_back(x + "⊗" + y);
  return t;
}

Matrix associator(const HomLongDimodule& u, const HomLongDimodule& v, const HomLongDimodule& w) {
  return assoc_from(u.mu, v.dim, w.mu);
}

Matrix associator_inverse(const HomLongDimodule& u, const HomLongDimodule& v, const HomLongDimodule& w) {
  return kron(u.mu, Matrix::identity(v.dim), invert(w.mu));
}

Matrix left_unitor(const HomLongDimodule& v) { return v.mu; }

Matrix right_unitor(const HomLongDimodule& v) { return v.mu; }

MonoidalConstraints monoidal_constraints(const HomLongDimodule& u, const HomLongDimodule& v,
                                         const HomLongDimodule& w) {
  return {associator(u, v, w), left_unitor(v), right_unitor(v)};
}

AxiomReport check_morphism(const Matrix& f, const HomLongDimodule& x, const HomLongDimodule& y) {
  require_same_base(x, y);
  if (f.rows() != y.dim || f.cols() != x.dim)
    throw Error(ErrorKind::DimensionMismatch, "morphism has the wrong shape");
  const std::size_t dh = x.H->dim;
  AxiomReport rep;
  rep.add(compare_maps("H-linear", f * x.action, y.action * kron(Matrix::identity(dh), f), {dh, x.dim}));
  rep.add(compare_maps("B-colinear", y.coaction * f, kron(Matrix::identity(x.B->dim), f) * x.coaction, {x.dim}));
  rep.add(compare_maps("structure-map", y.mu * f, f * x.mu, {x.dim}));
  return rep;
}

bool is_morphism(const Matrix& f, const HomLongDimodule& x, const HomLongDimodule& y) {
  return check_morphism(f, x, y).all_passed();
}

AxiomReport check_coherence(const HomLongDimodule& u, const HomLongDimodule& v, const HomLongDimodule& w,
                            const std::vector<HomLongDimodule>& fourth) {
  require_same_base(u, v);
  require_same_base(v, w);
  AxiomReport rep;
  const Matrix a = associator(u, v, w);
  const Matrix structure = kron(u.mu, v.mu, w.mu);
  rep.add(compare_maps("assoc-natural", a * structure, structure * a, {u.dim, v.dim, w.dim}));

  for (std::size_t i = 0; i < fourth.size(); ++i) {
    const HomLongDimodule& x = fourth[i];
    require_same_base(u, x);
    const Matrix I_u = Matrix::identity(u.dim);
    const Matrix I_x = Matrix::identity(x.dim);
    const Matrix lhs = assoc_from(u.mu, v.dim, kron(w.mu, x.mu)) * assoc_from(kron(u.mu, v.mu), w.dim, x.mu);
    const Matrix rhs = compose(kron(I_u, assoc_from(v.mu, w.dim, x.mu)),
                               assoc_from(u.mu, v.dim * w.dim, x.mu), kron(a, I_x));
    rep.add(compare_maps("pentagon[" + std::to_string(i) + "]", lhs, rhs, {u.dim, v.dim, w.dim, x.dim}));
  }

  const HomLongDimodule one = unit_dimodule(u.H, u.B);
  {
    const Matrix lhs = kron(Matrix::identity(u.dim), left_unitor(v)) * assoc_from(u.mu, 1, v.mu);
    const Matrix rhs = kron(right_unitor(u), Matrix::identity(v.dim));
    rep.add(compare_maps("triangle", lhs, rhs, {u.dim, v.dim}));
  }

  rep.add(summarize("assoc-morphism",
                    check_morphism(a, tensor_dimodule(tensor_dimodule(u, v), w), tensor_dimodule(u, tensor_dimodule(v, w)))));
  const char* names[] = {"U", "V", "W"};
  const HomLongDimodule* objs[] = {&u, &v, &w};
  for (int i = 0; i < 3; ++i) {
    const HomLongDimodule& o = *objs[i];
    rep.add(summarize(std::string("left-unit-morphism[") + names[i] + "]",
                      check_morphism(left_unitor(o), tensor_dimodule(one, o), o)));
    rep.add(summarize(std::string("right-unit-morphism[") + names[i] + "]",
                      check_morphism(right_unitor(o), tensor_dimodule(o, one), o)));
  }
  return rep;
}

namespace {

DualityData make_dual(const HomLongDimodule& m, const Matrix& s_h, const Matrix& s_b, DualSide side) {
  check_shape(m);
  const HomBialgebra& H = *m.H;
  const HomBialgebra& B = *m.B;
  const std::size_t dh = H.dim, db = B.dim, d = m.dim;
  const Matrix mu_m2 = power(m.mu, -2);
  // (h·f)(m) = f(S α⁻¹(h)·μ⁻²(m))
  const Matrix a = m.action * kron(s_h * invert(H.twist), mu_m2);
  // f₍₋₁₎ ⊗ f₍₀₎(m) = S' β⁻¹(m₍₋₁₎) ⊗ f(μ⁻²(m₍₀₎))
  const Matrix c = kron(s_b * invert(B.twist), mu_m2) * m.coaction;
  DualityData out;
  out.side = side;
  HomLongDimodule& dual = out.dual;
  dual.H = m.H;
  dual.B = m.B;
  dual.dim = d;
  dual.action = Matrix(d, dh * d);
  dual.coaction = Matrix(db * d, d);
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dual.action(j, h * d + i) = a(i, h * d + j);
  for (std::size_t x = 0; x < db; ++x)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dual.coaction(x * d + j, i) = c(x * d + i, j);
  dual.mu = transpose(invert(m.mu));
  for (const auto& n : m.basis) dual.basis.push_back(n + "*");
  out.ev = delta_row(d);
  out.coev = transpose(delta_row(d));
  return out;
}

}  // namespace

DualityData left_dual(const HomLongDimodule& m) {
  return make_dual(m, m.H->S(), invert_antipode(*m.B, "B"), DualSide::Left);
}

DualityData right_dual(const HomLongDimodule& m) {
  return make_dual(m, invert_antipode(*m.H, "H"), m.B->S(), DualSide::Right);
}

AxiomReport check_snake(const HomLongDimodule& m, const DualityData& dd, DualSide side) {
  const HomLongDimodule& s = dd.dual;
  const std::size_t d = m.dim, ds = s.dim;
  const Matrix I = Matrix::identity(d);
  const Matrix Is = Matrix::identity(ds);
  AxiomReport rep;
  if (side == DualSide::Left) {
    // r_M ∘ (id⊗ev) ∘ a_{M,M*,M} ∘ (coev⊗id) ∘ l_M⁻¹
    const Matrix z1 = compose(right_unitor(m), kron(I, dd.ev), associator(m, s, m), kron(dd.coev, I), invert(left_unitor(m)));
    // l_{M*} ∘ (ev⊗id) ∘ a⁻¹_{M*,M,M*} ∘ (id⊗coev) ∘ r_{M*}⁻¹
    const Matrix z2 = compose(left_unitor(s), kron(dd.ev, Is), associator_inverse(s, m, s), kron(Is, dd.coev), invert(right_unitor(s)));
    rep.add(compare_maps("snake-object", z1, I, {d}));
    rep.add(compare_maps("snake-dual", z2, Is, {ds}));
  } else {
    // l_M ∘ (ev⊗id) ∘ a⁻¹_{M,*M,M} ∘ (id⊗coev) ∘ r_M⁻¹
    const Matrix z1 = compose(left_unitor(m), kron(dd.ev, I), associator_inverse(m, s, m), kron(I, dd.coev), invert(right_unitor(m)));
    // r_{*M} ∘ (id⊗ev) ∘ a_{*M,M,*M} ∘ (coev⊗id) ∘ l_{*M}⁻¹
    const Matrix z2 = compose(right_unitor(s), kron(Is, dd.ev), associator(s, m, s), kron(dd.coev, Is), invert(left_unitor(s)));
    rep.add(compare_maps("snake-object", z1, I, {d}));
    rep.add(compare_maps("snake-dual", z2, Is, {ds}));
  }
  return rep;
}

AxiomReport check_duality_morphisms(const HomLongDimodule& m, const DualityData& dd) {
  const HomLongDimodule one = unit_dimodule(m.H, m.B);
  AxiomReport rep;
  if (dd.side == DualSide::Left) {
    rep.add(summarize("ev-morphism", check_morphism(dd.ev, tensor_dimodule(dd.dual, m), one)));
    rep.add(summarize("coev-morphism", check_morphism(dd.coev, one, tensor_dimodule(m, dd.dual))));
  } else {
    rep.add(summarize("ev-morphism", check_morphism(dd.ev, tensor_dimodule(m, dd.dual), one)));
    rep.add(summarize("coev-morphism", check_morphism(dd.coev, one, tensor_dimodule(dd.dual, m))));
  }
  return rep;
}

HomAlgebra smash_algebra(const HomBialgebra& h, const HomBialgebra& b) {
  return tensor_algebra(opposite_algebra(dual_hopf(b).algebra()), h.algebra());
}

HomModule to_smash_module(const HomLongDimodule& m) {
  check_shape(m);
  const std::size_t dh = m.H->dim, db = m.B->dim, d = m.dim;
  HomModule out;
  out.dim = d;
  out.nu = m.mu;
  out.basis = m.basis;
  out.action = compose(m.action, kron(delta_row(db), Matrix::identity(dh), invert(m.mu)),
                       permute_legs({db, dh, db, d}, {0, 2, 1, 3}),
                       kron(Matrix::identity(db * dh), m.coaction));
  return out;
}

HomLongDimodule from_smash_module(const HomModule& n, AlgebraRef h, AlgebraRef b) {
  const std::size_t dh = h->dim, db = b->dim, d = n.dim;
  check_shape(db * dh, n);
  HomLongDimodule m;
  m.dim = d;
  m.mu = n.nu;
  m.basis = n.basis;
  m.action = n.action * kron(Matrix::column(b->counit), Matrix::identity(dh), Matrix::identity(d));
  m.coaction = Matrix(db * d, d);
  const Matrix one = Matrix::column(h->unit);
  for (std::size_t i = 0; i < db; ++i) {
    Matrix e(db, 1);
    e(i, 0) = 1;
    const Matrix ei = n.action * kron(e, one, Matrix::identity(d));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m.coaction(i * d + j, k) = ei(j, k);
  }
  m.H = std::move(h);
  m.B = std::move(b);
  return m;
}

bool same_structure(const HomLongDimodule& m, const HomLongDimodule& n) {
  return m.dim == n.dim && m.action == n.action && m.coaction == n.coaction && m.mu == n.mu;
}

}  // namespace homlong

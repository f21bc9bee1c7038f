#include "homlong/braiding.hpp"

#include "homlong/error.hpp"

namespace homlong {

namespace {

void require_context(const BraidingContext& ctx, const HomLongDimodule& m) {
  check_shape(m);
  auto eq = [](const AlgebraRef& a, const AlgebraRef& b) { return a == b || (a && b && *a == *b); };
  if (!eq(ctx.H, m.H) || !eq(ctx.B, m.B))
    throw Error(ErrorKind::InvalidContext, "dimodule is not over the context's (H, B)");
}

Matrix I(std::size_t n) { return Matrix::identity(n); }

}  // namespace

BraidingContext make_context(AlgebraRef h, const Matrix& r, AlgebraRef b, const Matrix& form) {
  if (!h || !b) throw Error(ErrorKind::InvalidContext, "context needs both algebras");
  if (!h->is_hopf() || !b->is_hopf()) throw Error(ErrorKind::InvalidContext, "context algebras must be Hopf");
  if (r.rows() != h->dim || r.cols() != h->dim || form.rows() != b->dim || form.cols() != b->dim)
    throw Error(ErrorKind::InvalidContext, "R or form does not match its algebra");
  BraidingContext ctx{h, make_quasitriangular(*h, r), b, make_coquasitriangular(*b, form)};
  if (auto bad = ctx.R.report.first_failure())
    throw Error(ErrorKind::InvalidContext, "R fails " + bad->id);
  if (auto bad = ctx.form.report.first_failure())
    throw Error(ErrorKind::InvalidContext, "form fails " + bad->id);
  return ctx;
}

BraidOperator long_braiding(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n) {
  require_context(ctx, m);
  require_context(ctx, n);
  const std::size_t d = ctx.H->dim, b = ctx.B->dim, dm = m.dim, dn = n.dim;
  const Matrix f = form_row(ctx.form.form);
  const Matrix r = element_column(ctx.R.R);
  Matrix c = compose(kron(n.action, m.action), permute_legs({d, d, dm, dn}, {1, 3, 0, 2}), kron(r, I(dm), I(dn)),
                     kron(f, power(m.mu, -2), power(n.mu, -2)), permute_legs({b, dm, b, dn}, {0, 2, 1, 3}),
                     kron(m.coaction, n.coaction));
  return {dm, dn, std::move(c)};
}

BraidOperator long_braiding_inverse(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n) {
  require_context(ctx, m);
  require_context(ctx, n);
  const std::size_t d = ctx.H->dim, b = ctx.B->dim, dm = m.dim, dn = n.dim;
  Matrix sb_inv;
  try {
    sb_inv = invert(ctx.B->S());
  } catch (const Error&) {
    throw Error(ErrorKind::AntipodeNotInvertible, "antipode of B is not invertible");
  }
  const Matrix f = form_row(ctx.form.form) * kron(sb_inv, I(b));
  const Matrix r = element_column(ctx.R.R);
  Matrix c = compose(kron(m.action * kron(ctx.H->S(), I(dm)), n.action), permute_legs({d, d, dm, dn}, {0, 2, 1, 3}),
                     kron(r, I(dm), I(dn)), kron(f, power(m.mu, -2), power(n.mu, -2)),
                     permute_legs({b, dn, b, dm}, {2, 0, 3, 1}), kron(n.coaction, m.coaction));
  return {dm, dn, std::move(c)};
}

AxiomReport check_braid_morphism(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n) {
  const BraidOperator c = long_braiding(ctx, m, n);
  return check_morphism(c.matrix, tensor_dimodule(m, n), tensor_dimodule(n, m));
}

AxiomReport check_braid_inverse(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n) {
  const Matrix c = long_braiding(ctx, m, n).matrix;
  const Matrix ci = long_braiding_inverse(ctx, m, n).matrix;
  AxiomReport rep;
  rep.add(compare_maps("inverse-left", ci * c, I(m.dim * n.dim), {m.dim, n.dim}));
  rep.add(compare_maps("inverse-right", c * ci, I(m.dim * n.dim), {n.dim, m.dim}));
  try {
    rep.add(compare_maps("inverse-matches-matrix-inverse", ci, invert(c), {n.dim, m.dim}));
  } catch (const Error& e) {
    rep.fail("inverse-matches-matrix-inverse", {}, e.what());
  }
  return rep;
}

AxiomReport check_naturality(const BraidingContext& ctx, const Matrix& f, const HomLongDimodule& m,
                             const HomLongDimodule& m2, const Matrix& g, const HomLongDimodule& n,
                             const HomLongDimodule& n2) {
  for (auto [map, src, dst, name] : {std::tuple{&f, &m, &m2, "f"}, std::tuple{&g, &n, &n2, "g"}}) {
    AxiomReport mr = check_morphism(*map, *src, *dst);
    if (auto bad = mr.first_failure())
      throw Error(ErrorKind::NotAMorphism, std::string(name) + " is not " + bad->id + " at " + format_witness(bad->witness));
  }
  const Matrix lhs = kron(g, f) * long_braiding(ctx, m, n).matrix;
  const Matrix rhs = long_braiding(ctx, m2, n2).matrix * kron(f, g);
  AxiomReport rep;
  rep.add(compare_maps("naturality", lhs, rhs, {m.dim, n.dim}));
  return rep;
}

AxiomReport check_hexagons(const BraidingContext& ctx, const HomLongDimodule& u, const HomLongDimodule& v,
                           const HomLongDimodule& w) {
  const HomLongDimodule vw = tensor_dimodule(v, w);
  const HomLongDimodule uv = tensor_dimodule(u, v);
  const Matrix c_uw = long_braiding(ctx, u, w).matrix;
  AxiomReport rep;
  {
    const Matrix lhs = compose(associator(v, w, u), long_braiding(ctx, u, vw).matrix, associator(u, v, w));
    const Matrix rhs = compose(kron(I(v.dim), c_uw), associator(v, u, w),
                               kron(long_braiding(ctx, u, v).matrix, I(w.dim)));
    rep.add(compare_maps("hexagon-1", lhs, rhs, {u.dim, v.dim, w.dim}));
  }
  {
    const Matrix lhs = compose(associator_inverse(w, u, v), long_braiding(ctx, uv, w).matrix, associator_inverse(u, v, w));
    const Matrix rhs = compose(kron(c_uw, I(v.dim)), associator_inverse(u, w, v),
                               kron(I(u.dim), long_braiding(ctx, v, w).matrix));
    rep.add(compare_maps("hexagon-2", lhs, rhs, {u.dim, v.dim, w.dim}));
  }
  return rep;
}

AxiomReport check_qybe(const BraidingContext& ctx, const HomLongDimodule& u, const HomLongDimodule& v,
                       const HomLongDimodule& w) {
  const Matrix c_uv = long_braiding(ctx, u, v).matrix;
  const Matrix c_uw = long_braiding(ctx, u, w).matrix;
  const Matrix c_vw = long_braiding(ctx, v, w).matrix;
  const Matrix lhs = compose(kron(I(w.dim), c_uv), associator(w, u, v), kron(c_uw, I(v.dim)),
                             associator_inverse(u, w, v), kron(I(u.dim), c_vw), associator(u, v, w));
  const Matrix rhs = compose(associator(w, v, u), kron(c_vw, I(u.dim)), associator_inverse(v, w, u),
                             kron(I(v.dim), c_uw), associator(v, u, w), kron(c_uv, I(w.dim)));
  AxiomReport rep;
  rep.add(compare_maps("qybe", lhs, rhs, {u.dim, v.dim, w.dim}));
  return rep;
}

YetterDrinfeldModule hb_yd_structure(const BraidingContext& ctx, const HomLongDimodule& m) {
  require_context(ctx, m);
  const std::size_t d = ctx.H->dim, b = ctx.B->dim, dm = m.dim;
  const Matrix f = form_row(ctx.form.form);
  const Matrix r = element_column(ctx.R.R);
  const Matrix mu_inv = invert(m.mu);
  YetterDrinfeldModule y;
  y.dim = dm;
  y.structure_map = m.mu;
  y.basis = m.basis;
  y.action = compose(m.action, kron(I(d), f, mu_inv), kron(power(ctx.H->twist, -3), I(b), m.coaction));
  y.coaction = compose(kron(I(d), I(b), m.action), permute_legs({d, d, b, dm}, {1, 2, 0, 3}), kron(r, I(b), I(dm)),
                       kron(power(ctx.B->twist, -3), mu_inv), m.coaction);
  return y;
}

AxiomReport check_hb_yd(const BraidingContext& ctx, const HomLongDimodule& m) {
  const HomBialgebra hb = tensor_hopf(*ctx.H, *ctx.B);
  const YetterDrinfeldModule y = hb_yd_structure(ctx, m);
  AxiomReport rep = validate_hom_module(hb.algebra(), y.module());
  rep.append(validate_hom_comodule(hb.coalgebra(), y.comodule()));
  rep.append(check_yd(hb, y));
  return rep;
}

AxiomReport check_braiding_compatibility(const BraidingContext& ctx, const HomLongDimodule& m,
                                         const HomLongDimodule& n) {
  const HomBialgebra hb = tensor_hopf(*ctx.H, *ctx.B);
  const Matrix pre = yd_prebraiding(hb, hb_yd_structure(ctx, m), hb_yd_structure(ctx, n));
  AxiomReport rep;
  rep.add(compare_maps("prebraiding-equals-braiding", pre, long_braiding(ctx, m, n).matrix, {m.dim, n.dim}));
  return rep;
}

HomLongDimodule module_as_dimodule(AlgebraRef h, const HomModule& m, AlgebraRef b) {
  HomLongDimodule d;
  d.dim = m.dim;
  d.action = m.action;
  d.coaction = kron(Matrix::column(b->unit), m.nu);
  d.mu = m.nu;
  d.basis = m.basis;
  d.H = std::move(h);
  d.B = std::move(b);
  return d;
}

HomLongDimodule comodule_as_dimodule(AlgebraRef b, const HomComodule& m, AlgebraRef h) {
  HomLongDimodule d;
  d.dim = m.dim;
  d.action = kron(Matrix::row(h->counit), m.mu);
  d.coaction = m.coaction;
  d.mu = m.mu;
  d.basis = m.basis;
  d.H = std::move(h);
  d.B = std::move(b);
  return d;
}

Matrix module_family_braiding(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n) {
  const std::size_t d = ctx.H->dim, dm = m.dim, dn = n.dim;
  const Matrix r = element_column(ctx.R.R);
  return compose(kron(n.action, m.action), permute_legs({d, d, dm, dn}, {1, 3, 0, 2}), kron(r, I(dm), I(dn)),
                 kron(invert(m.mu), invert(n.mu)));
}

Matrix comodule_family_braiding(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n,
                                int exponent) {
  const std::size_t b = ctx.B->dim, dm = m.dim, dn = n.dim;
  const Matrix f = form_row(ctx.form.form);
  return compose(flip(dm, dn), kron(f, power(m.mu, exponent), power(n.mu, exponent)), permute_legs({b, dm, b, dn}, {0, 2, 1, 3}),
                 kron(m.coaction, n.coaction));
}

AxiomReport check_symmetry(const BraidingContext& ctx, const HomLongDimodule& m, const HomLongDimodule& n,
                           bool diagnose) {
  const bool hypotheses = ctx.R.triangular && ctx.form.cotriangular;
  if (!hypotheses && !diagnose)
    throw Error(ErrorKind::InvalidContext, std::string("symmetry needs ") +
                                               (ctx.R.triangular ? "" : "a triangular R") +
                                               (!ctx.R.triangular && !ctx.form.cotriangular ? " and " : "") +
                                               (ctx.form.cotriangular ? "" : "a cotriangular form"));
  const Matrix c2 = long_braiding(ctx, n, m).matrix * long_braiding(ctx, m, n).matrix;
  AxiomReport rep;
  AxiomCheck sym = compare_maps("symmetry", c2, I(m.dim * n.dim), {m.dim, n.dim});
  if (!hypotheses) {
    sym.informational = true;
    rep.info("hypotheses", false, std::string("triangular=") + (ctx.R.triangular ? "yes" : "no") +
                                      " cotriangular=" + (ctx.form.cotriangular ? "yes" : "no"));
  }
  rep.add(sym);
  return rep;
}

}  // namespace homlong

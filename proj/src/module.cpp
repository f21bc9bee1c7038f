#include "homlong/module.hpp"

#include "homlong/error.hpp"
#include "sparse_chain.hpp"

namespace homlong {

namespace {

AxiomCheck invertibility(std::string id, const Matrix& m) {
  try {
    (void)invert(m);
    return {std::move(id), true, {}, "", false};
  } catch (const Error&) {
    return {std::move(id), false, {}, "determinant is 0", false};
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

void check_shape(std::size_t algebra_dim, const HomModule& m) {
  require(m.action.rows() == m.dim && m.action.cols() == algebra_dim * m.dim,
          "action must be dim x (algebra dim · dim)");
  require(m.nu.rows() == m.dim && m.nu.cols() == m.dim, "structure map must be dim x dim");
}

void check_shape(std::size_t coalgebra_dim, const HomComodule& m) {
  require(m.coaction.rows() == coalgebra_dim * m.dim && m.coaction.cols() == m.dim,
          "coaction must be (coalgebra dim · dim) x dim");
  require(m.mu.rows() == m.dim && m.mu.cols() == m.dim, "structure map must be dim x dim");
}

AxiomReport validate_hom_module(const HomAlgebra& a, const HomModule& m) {
  check_shape(a);
  check_shape(a.dim, m);
  const std::size_t d = a.dim, n = m.dim;
  const Matrix& act = m.action;
  AxiomReport rep;
  rep.add(invertibility("nu-invertible", m.nu));
  rep.add(compare_maps("HM1", m.nu * act, act * kron(a.twist, m.nu), {d, n}));
  rep.add(compare_maps("HM2-assoc", act * kron(a.twist, act), act * kron(a.mult, m.nu), {d, d, n}));
  rep.add(compare_maps("HM2-unit", act * kron(Matrix::column(a.unit), Matrix::identity(n)), m.nu, {n}));
  return rep;
}

AxiomReport validate_hom_comodule(const HomCoalgebra& c, const HomComodule& m) {
  check_shape(c);
  check_shape(c.dim, m);
  const std::size_t n = m.dim;
  const Matrix& co = m.coaction;
  AxiomReport rep;
  rep.add(invertibility("mu-invertible", m.mu));
  rep.add(compare_maps("HCM1-a", co * m.mu, kron(c.twist, m.mu) * co, {n}));
  rep.add(compare_maps("HCM1-b", kron(Matrix::row(c.counit), Matrix::identity(n)) * co, m.mu, {n}));
  rep.add(compare_maps("HCM2", kron(c.twist, co) * co, kron(c.comult, m.mu) * co, {n}));
  return rep;
}

AxiomReport check_yd(const HomBialgebra& h, const YetterDrinfeldModule& m) {
  check_shape(h);
  check_shape(h.dim, m.module());
  check_shape(h.dim, m.comodule());
  const std::size_t d = h.dim, n = m.dim;
  const Matrix Id = Matrix::identity(d);
  const Matrix In = Matrix::identity(n);
  const Matrix& b = h.twist;
  const Matrix b2 = b * b;
  const Matrix b3 = b2 * b;
  const Matrix& act = m.action;
  const Matrix& co = m.coaction;

  using sparse::Stage;
  // h₁β(m₍₋₁₎) ⊗ β³(h₂)▷m₍₀₎
  const std::vector<Stage> lhs{Stage::kron({h.mult, act}), Stage::kron({Id, b, b3, In}),
                               Stage::permute({d, d, d, n}, {0, 2, 1, 3}), Stage::kron({h.comult, co})};
  // (β²(h₁)▷m)₍₋₁₎h₂ ⊗ (β²(h₁)▷m)₍₀₎
  const std::vector<Stage> rhs{Stage::kron({h.mult, In}), Stage::permute({d, n, d}, {0, 2, 1}),
                               Stage::kron({co, Id}),     Stage::kron({act, Id}),
                               Stage::permute({d, d, n}, {0, 2, 1}), Stage::kron({b2, Id, In}),
                               Stage::kron({h.comult, In})};
  AxiomReport rep;
  AxiomCheck hyd = sparse::compare("HYD", lhs, rhs, {d, n});
  rep.add(hyd);
  if (h.is_hopf()) {
    const Matrix b4 = b2 * b2;
    const Matrix bm2 = power(b, -2);
    const std::vector<Stage> p_lhs{Stage::kron({co}), Stage::kron({act}), Stage::kron({b4, In})};
    // β⁻²(h₁₁β(m₍₋₁₎))S(h₂) ⊗ β³(h₁₂)▷m₍₀₎
    const std::vector<Stage> p_rhs{Stage::kron({h.mult, act}),
                                   Stage::kron({bm2, Id, Id, In}),
                                   Stage::kron({h.mult, Id, Id, In}),
                                   Stage::kron({Id, b, h.S(), b3, In}),
                                   Stage::permute({d, d, d, d, n}, {0, 3, 2, 1, 4}),
                                   Stage::kron({h.comult, Id, Id, In}),
                                   Stage::kron({h.comult, co})};
    AxiomCheck prime = sparse::compare("HYD-prime", p_lhs, p_rhs, {d, n});
    prime.informational = true;
    rep.add(prime);
    rep.info("HYD-consistency", prime.passed == hyd.passed,
             prime.passed == hyd.passed ? "" : "the two forms of the condition disagree");
  }
  return rep;
}

Matrix yd_prebraiding(const HomBialgebra& h, const YetterDrinfeldModule& m, const YetterDrinfeldModule& n) {
  check_shape(h.dim, m.module());
  check_shape(h.dim, m.comodule());
  check_shape(h.dim, n.module());
  const std::size_t d = h.dim, dm = m.dim, dn = n.dim;
  return compose(kron(n.action, Matrix::identity(dm)),
                 kron(h.twist * h.twist, Matrix::identity(dn), invert(m.structure_map)),
                 permute_legs({d, dm, dn}, {0, 2, 1}), kron(m.coaction, invert(n.structure_map)));
}

HomModule regular_module(const HomAlgebra& a) { return {a.dim, a.mult, a.twist, a.basis}; }

HomComodule regular_comodule(const HomCoalgebra& c) { return {c.dim, c.comult, c.twist, c.basis}; }

HomModule trivial_module(const HomBialgebra& h, const Matrix& nu) {
  return {nu.rows(), kron(Matrix::row(h.counit), nu), nu, default_basis("m", nu.rows())};
}

HomComodule trivial_comodule(const HomBialgebra& c, const Matrix& mu) {
  return {mu.rows(), kron(Matrix::column(c.unit), mu), mu, default_basis("m", mu.rows())};
}

}  // namespace homlong

#include <doctest.h>

#include "homlong/error.hpp"
#include "homlong/fixtures.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace homlong;
namespace fx = homlong::fixtures;
using oracle::Vec;

namespace {

// h·v for h, v given in coordinates; column h·n+i of the action holds e_h·m_i.
Vec act(const Matrix& action, std::size_t d, std::size_t n, const Vec& h, const Vec& v) {
  Vec out(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      if (h[a].is_zero() || v[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] += h[a] * v[i] * action(j, a * n + i);
    }
  return out;
}

// First (h,g,i) with α(e_h)·(e_g·m_i) != (e_h e_g)·ν(m_i).
std::optional<oracle::Tuple> first_module_failure(const HomBialgebra& h, const HomModule& m) {
  oracle::Table t = oracle::table(h);
  const std::size_t d = h.dim, n = m.dim;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        Vec ea = oracle::basis(d, a), eb = oracle::basis(d, b), mi = oracle::basis(n, i);
        Vec lhs = act(m.action, d, n, oracle::image(h.twist, ea), act(m.action, d, n, eb, mi));
        Vec rhs = act(m.action, d, n, oracle::prod(t, ea, eb), oracle::image(m.nu, mi));
        if (lhs != rhs) return oracle::Tuple{a, b, i};
      }
  return std::nullopt;
}

// ρ(v) as a d·n vector, index a·n+j.
Vec coact(const Matrix& coaction, const Vec& v) { return oracle::image(coaction, v); }

// The compatibility h₁β(m₍₋₁₎) ⊗ β³(h₂)·m₍₀₎ = (β²(h₁)·m)₍₋₁₎h₂ ⊗ (β²(h₁)·m)₍₀₎ on basis pairs.
bool yd_holds(const HomBialgebra& h, const YetterDrinfeldModule& m) {
  oracle::Table t = oracle::table(h);
  const std::size_t d = h.dim, n = m.dim;
  const Matrix b = h.twist, b2 = b * b, b3 = b2 * b;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      Vec dx = oracle::delta(t, oracle::basis(d, x));
      Vec rm = coact(m.coaction, oracle::basis(n, i));
      Vec lhs(d * n), rhs(d * n);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          const Scalar c = dx[p * d + q];
          if (c.is_zero()) continue;
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t j = 0; j < n; ++j) {
              const Scalar k = rm[a * n + j];
              if (k.is_zero()) continue;
              Vec left = oracle::prod(t, oracle::basis(d, p), oracle::image(b, oracle::basis(d, a)));
              Vec right = act(m.action, d, n, oracle::image(b3, oracle::basis(d, q)), oracle::basis(n, j));
              for (std::size_t u = 0; u < d; ++u)
                for (std::size_t w = 0; w < n; ++w) lhs[u * n + w] += c * k * left[u] * right[w];
            }
          Vec hm = act(m.action, d, n, oracle::image(b2, oracle::basis(d, p)), oracle::basis(n, i));
          Vec r2 = coact(m.coaction, hm);
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t j = 0; j < n; ++j) {
              if (r2[a * n + j].is_zero()) continue;
              Vec left = oracle::prod(t, oracle::basis(d, a), oracle::basis(d, q));
              for (std::size_t u = 0; u < d; ++u) rhs[u * n + j] += c * r2[a * n + j] * left[u];
            }
        }
      if (lhs != rhs) return false;
    }
  return true;
}

YetterDrinfeldModule sign_yd() {
  HomModule m = fx::sign_module();
  HomComodule c = fx::sign_comodule();
  return {1, m.action, c.coaction, Matrix::identity(1), {"v"}};
}

}  // namespace

TEST_CASE("regular, trivial and sign modules satisfy the module axioms") {
  for (const HomBialgebra& h : {fx::cyclic_group(2), fx::twisted_z4(), fx::twisted_sweedler()}) {
    HomModule reg = regular_module(h.algebra());
    CHECK(validate_hom_module(h.algebra(), reg).all_passed());
    CHECK_FALSE(first_module_failure(h, reg).has_value());
    HomModule triv = trivial_module(h, Matrix::identity(2));
    CHECK(validate_hom_module(h.algebra(), triv).all_passed());
    CHECK(validate_hom_comodule(h.coalgebra(), regular_comodule(h.coalgebra())).all_passed());
    CHECK(validate_hom_comodule(h.coalgebra(), trivial_comodule(h, Matrix::identity(3))).all_passed());
  }
  HomBialgebra z2 = fx::cyclic_group(2);
  CHECK(validate_hom_module(z2.algebra(), fx::sign_module()).all_passed());
  CHECK(validate_hom_comodule(z2.coalgebra(), fx::sign_comodule()).all_passed());
}

TEST_CASE("a perturbed action fails associativity at the oracle's tuple") {
  HomBialgebra h = fx::twisted_sweedler();
  HomModule reg = regular_module(h.algebra());
  int failures = 0;
  for (std::size_t r = 0; r < reg.action.rows(); ++r)
    for (std::size_t c = 0; c < reg.action.cols(); ++c) {
      HomModule bad = reg;
      bad.action(r, c) += 1;
      auto expect = first_module_failure(h, bad);
      AxiomReport rep = validate_hom_module(h.algebra(), bad);
      const AxiomCheck* line = rep.find("HM2-assoc");
      REQUIRE(line);
      CHECK(line->passed == !expect.has_value());
      if (expect) {
        CHECK(line->witness == *expect);
        ++failures;
      }
    }
  CHECK(failures > 0);
}

TEST_CASE("a module whose structure map does not commute with the action fails HM1") {
  HomBialgebra h = fx::sweedler();
  HomModule m = regular_module(h.algebra());
  m.nu = fx::sweedler_scaling(Scalar(2));
  // α = id, so ν(h·m) = h·ν(m) would need ν to be a left module map of the regular module
  AxiomReport r = validate_hom_module(h.algebra(), m);
  CHECK_FALSE(r.passed("HM1"));
}

TEST_CASE("a perturbed coaction fails a comodule axiom") {
  HomBialgebra h = fx::twisted_z4();
  HomComodule reg = regular_comodule(h.coalgebra());
  for (std::size_t r = 0; r < reg.coaction.rows(); ++r) {
    HomComodule bad = reg;
    bad.coaction(r, 1) += 1;
    CHECK_FALSE(validate_hom_comodule(h.coalgebra(), bad).all_passed());
  }
}

TEST_CASE("Yetter-Drinfeld condition agrees with the loop evaluation") {
  HomBialgebra z2 = fx::cyclic_group(2);
  YetterDrinfeldModule s = sign_yd();
  AxiomReport r = check_yd(z2, s);
  CHECK(r.passed("HYD"));
  CHECK(yd_holds(z2, s));
  CHECK(r.passed("HYD-consistency"));

  // regular module with trivial coaction over the Sweedler algebra and its twist
  for (const HomBialgebra& h : {fx::sweedler(), fx::twisted_sweedler(), fx::twisted_z4()}) {
    HomComodule triv = trivial_comodule(h, h.twist);
    YetterDrinfeldModule m{h.dim, h.mult, triv.coaction, h.twist, h.basis};
    AxiomReport rep = check_yd(h, m);
    CHECK(rep.passed("HYD") == yd_holds(h, m));
    CHECK(rep.passed("HYD-consistency"));
  }
  // the group algebra is commutative and cocommutative, so any grading works
  HomBialgebra z4 = fx::twisted_z4();
  YetterDrinfeldModule g{4, z4.mult, z4.comult, z4.twist, z4.basis};
  CHECK(check_yd(z4, g).passed("HYD") == yd_holds(z4, g));
}

TEST_CASE("pre-braiding of the sign module is minus the identity") {
  // β²(g)·v ⊗ v = −v⊗v
  CHECK(yd_prebraiding(fx::cyclic_group(2), sign_yd(), sign_yd()) == Matrix{{-1}});
}

TEST_CASE("shape errors are reported as DimensionMismatch") {
  HomBialgebra z2 = fx::cyclic_group(2);
  HomModule m = fx::sign_module();
  m.action = Matrix(1, 3);
  try {
    validate_hom_module(z2.algebra(), m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

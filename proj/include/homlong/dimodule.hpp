#pragma once

#include <memory>

#include "homlong/module.hpp"

namespace homlong {

using AlgebraRef = std::shared_ptr<const HomBialgebra>;

inline AlgebraRef share(HomBialgebra h) { return std::make_shared<const HomBialgebra>(std::move(h)); }

// An H-module and B-comodule on one carrier with a shared structure map.
struct HomLongDimodule {
  AlgebraRef H;
  AlgebraRef B;
  std::size_t dim = 0;
  Matrix action;    // dim × (dimH·dim)
  Matrix coaction;  // (dimB·dim) × dim
  Matrix mu;
  std::vector<std::string> basis;

  HomModule module() const { return {dim, action, mu, basis}; }
  HomComodule comodule() const { return {dim, coaction, mu, basis}; }
};

bool same_base(const HomLongDimodule& m, const HomLongDimodule& n);
void require_same_base(const HomLongDimodule& m, const HomLongDimodule& n);
void check_shape(const HomLongDimodule& m);

// Module axioms over H, comodule axioms over B, and the compatibility
// ρ(h·m) = β(m₍₋₁₎) ⊗ α(h)·m₍₀₎ (reported as "long-compat").
AxiomReport validate_long_dimodule(const HomLongDimodule& m);

// The unit object k with h·1 = ε(h), ρ(1) = 1⊗1 and identity structure map.
HomLongDimodule unit_dimodule(AlgebraRef h, AlgebraRef b);
// H⊗B with h·(g⊗x) = hg⊗β(x), ρ(g⊗x) = x₁⊗(α(g)⊗x₂), structure map α⊗β.
HomLongDimodule canonical_dimodule(AlgebraRef h, AlgebraRef b);
// h·(m⊗n) = h₁·m⊗h₂·n, ρ(m⊗n) = β⁻²(m₍₋₁₎n₍₋₁₎)⊗m₍₀₎⊗n₍₀₎, structure map μ⊗ν.
HomLongDimodule tensor_dimodule(const HomLongDimodule& m, const HomLongDimodule& n);

// a((u⊗v)⊗w) = μ⁻¹(u)⊗(v⊗ω(w)) on the flat basis of U⊗V⊗W.
Matrix associator(const HomLongDimodule& u, const HomLongDimodule& v, const HomLongDimodule& w);
Matrix associator_inverse(const HomLongDimodule& u, const HomLongDimodule& v, const HomLongDimodule& w);
// l(1⊗v) = ν(v) and r(v⊗1) = ν(v); k⊗V and V⊗k share V's flat basis.
Matrix left_unitor(const HomLongDimodule& v);
Matrix right_unitor(const HomLongDimodule& v);

struct MonoidalConstraints {
  Matrix assoc;
  Matrix left_unit;   // for V
  Matrix right_unit;  // for V
};
MonoidalConstraints monoidal_constraints(const HomLongDimodule& u, const HomLongDimodule& v,
                                         const HomLongDimodule& w);

// H-linearity, B-colinearity and commuting with the structure maps, for f : X -> Y.
AxiomReport check_morphism(const Matrix& f, const HomLongDimodule& x, const HomLongDimodule& y);
bool is_morphism(const Matrix& f, const HomLongDimodule& x, const HomLongDimodule& y);

// Naturality of a, the triangle for (U,V), the pentagon for (U,V,W,X) for
// each X in `fourth`, and whether a, l, r are morphisms.
AxiomReport check_coherence(const HomLongDimodule& u, const HomLongDimodule& v, const HomLongDimodule& w,
                            const std::vector<HomLongDimodule>& fourth);

enum class DualSide { Left, Right };

struct DualityData {
  HomLongDimodule dual;
  Matrix ev;    // left: M*⊗M -> k,  right: M⊗*M -> k
  Matrix coev;  // left: k -> M⊗M*,  right: k -> *M⊗M
  DualSide side = DualSide::Left;
};

DualityData left_dual(const HomLongDimodule& m);
DualityData right_dual(const HomLongDimodule& m);
// Both zig-zag composites, assembled with the associator and unit constraints.
AxiomReport check_snake(const HomLongDimodule& m, const DualityData& d, DualSide side);
// Whether ev and coev are themselves morphisms of dimodules (reported separately).
AxiomReport check_duality_morphisms(const HomLongDimodule& m, const DualityData& d);

// The Hom-algebra B*ᵒᵖ ⊗ H.
HomAlgebra smash_algebra(const HomBialgebra& h, const HomBialgebra& b);
// (p⊗h)⇀m = p(m₍₋₁₎) h·μ⁻¹(m₍₀₎)
HomModule to_smash_module(const HomLongDimodule& m);
// h·m = (ε⊗h)⇀m, ρ(m) = Σ e_i ⊗ (eⁱ⊗1)⇀m
HomLongDimodule from_smash_module(const HomModule& n, AlgebraRef h, AlgebraRef b);

bool same_structure(const HomLongDimodule& m, const HomLongDimodule& n);

}  // namespace homlong

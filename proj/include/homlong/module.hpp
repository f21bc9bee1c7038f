#pragma once

#include "homlong/algebra.hpp"

namespace homlong {

// action : dim × (dimA·dim), column h·dim+i holds e_h ▷ m_i.
struct HomModule {
  std::size_t dim = 0;
  Matrix action;
  Matrix nu;
  std::vector<std::string> basis;
};

// coaction : (dimC·dim) × dim, column i holds ρ(m_i) with legs (c, m).
struct HomComodule {
  std::size_t dim = 0;
  Matrix coaction;
  Matrix mu;
  std::vector<std::string> basis;
};

// A module and a comodule on one carrier sharing one structure map.
struct YetterDrinfeldModule {
  std::size_t dim = 0;
  Matrix action;
  Matrix coaction;
  Matrix structure_map;
  std::vector<std::string> basis;

  HomModule module() const { return {dim, action, structure_map, basis}; }
  HomComodule comodule() const { return {dim, coaction, structure_map, basis}; }
};

void check_shape(std::size_t algebra_dim, const HomModule& m);
void check_shape(std::size_t coalgebra_dim, const HomComodule& m);

AxiomReport validate_hom_module(const HomAlgebra& a, const HomModule& m);
AxiomReport validate_hom_comodule(const HomCoalgebra& c, const HomComodule& m);

// The Yetter-Drinfeld compatibility; for Hopf H also the antipode form of the
// condition as an informational cross-check, plus a flag saying whether the two agree.
AxiomReport check_yd(const HomBialgebra& h, const YetterDrinfeldModule& m);

// C(m⊗n) = β²(m₍₋₁₎)▷ν⁻¹(n) ⊗ μ⁻¹(m₍₀₎), as a matrix M⊗N -> N⊗M.
Matrix yd_prebraiding(const HomBialgebra& h, const YetterDrinfeldModule& m, const YetterDrinfeldModule& n);

HomModule regular_module(const HomAlgebra& a);
HomComodule regular_comodule(const HomCoalgebra& c);
// h ▷ m = ε(h)·ν(m).
HomModule trivial_module(const HomBialgebra& h, const Matrix& nu);
// ρ(m) = 1 ⊗ μ(m).
HomComodule trivial_comodule(const HomBialgebra& c, const Matrix& mu);

}  // namespace homlong

#pragma once

#include <cstddef>
#include <vector>

#include "homlong/dimodule.hpp"

namespace homlong {

// An endomorphism of M⊗M together with the structure map μ of M.
struct OperatorOnTensorSquare {
  std::size_t n = 0;
  Matrix matrix;  // n²×n², lexicographic basis
  Matrix mu;      // n×n, invertible
  bool classical = false;
};

void check_shape(const OperatorOnTensorSquare& r);

// F⊗μ, μ⊗F and (id⊗τ)∘(F⊗μ)∘(id⊗τ) on M⊗M⊗M.
Matrix leg12(const Matrix& f, const Matrix& mu);
Matrix leg23(const Matrix& f, const Matrix& mu);
Matrix leg13(const Matrix& f, const Matrix& mu);
// x⊗y⊗z ↦ z⊗x⊗y
Matrix cyclic_shift(std::size_t n);

// R¹²∘R²³ = R²³∘R¹² ("long-equation"), witness a basis triple.
AxiomReport check_long_equation(const OperatorOnTensorSquare& r);
bool solves_long_equation(const OperatorOnTensorSquare& r);
// Verdicts for R and R⁻¹ (informational) and whether they agree.
AxiomReport check_invertible_iff(const OperatorOnTensorSquare& r);

// R(m_i⊗m_j) = b_ij m_i⊗m_j with μ = diag(a); flagged classical when every a_i = 1.
OperatorOnTensorSquare diagonal_solution(const Vector& a, const Matrix& b);

// Coordinates X with X[(i,j),(k,l)] = x_kl^ij such that R = (id⊗μ⁻¹)∘X.
Matrix coordinates_of(const OperatorOnTensorSquare& r);
OperatorOnTensorSquare operator_from_coordinates(const Matrix& x, const Matrix& z);
// Whether R commutes with μ⊗μ⁻¹.
bool is_equivariant(const OperatorOnTensorSquare& r);

// Evaluates z_u^i x_vw^jk y_ij^pq = z_i^p x_jw^qk y_uv^ij over all free indices
// ("index-identity", witness (u,v,w,p,q,k)) and S¹²∘R²³ = R²³∘S¹² for the
// operators m_k⊗m_l ↦ x_kl^ij m_i⊗μ⁻¹(m_j) ("operator-identity"), plus an
// "agreement" line. Equivariance of R and S is reported as information.
AxiomReport coordinate_criterion(const Matrix& x, const Matrix& y, const Matrix& z);
inline AxiomReport hom_long_criterion(const Matrix& x, const Matrix& z) { return coordinate_criterion(x, x, z); }

struct TauTransforms {
  OperatorOnTensorSquare U;  // τ∘R
  OperatorOnTensorSquare T;  // R∘τ
  OperatorOnTensorSquare W;  // τ∘R∘τ
  AxiomReport report;        // four verdicts (informational) and "verdicts-coincide"
};
TauTransforms tau_transforms(const OperatorOnTensorSquare& r);

// A Long dimodule with B = H.
struct HAlphaLongDimodule {
  AlgebraRef H;
  std::size_t dim = 0;
  Matrix action;
  Matrix coaction;
  Matrix mu;
  std::vector<std::string> basis;

  HomLongDimodule as_long() const { return {H, H, dim, action, coaction, mu, basis}; }
};

AxiomReport validate_halpha_dimodule(const HAlphaLongDimodule& d);
// On H⊗M: h·(g⊗m) = α(g)⊗h·μ(m), ρ(g⊗m) = g₁⊗g₂⊗μ(m).
HAlphaLongDimodule module_extension(AlgebraRef h, const HomModule& m);
// On H⊗M: h·(g⊗m) = hg⊗μ(m), ρ(g⊗m) = m₍₋₁₎⊗α(g)⊗m₍₀₎.
HAlphaLongDimodule comodule_extension(AlgebraRef h, const HomComodule& m);
// R(m⊗n) = n₍₋₁₎·m ⊗ n₍₀₎
OperatorOnTensorSquare dimodule_solution(const HAlphaLongDimodule& d);

enum class SearchShape { Diagonal, Full };

inline constexpr std::size_t kSearchCap = std::size_t{1} << 20;

// Every operator with entries from `coefficients` (off-diagonal entries zero in
// diagonal shape) solving the Long equation for μ, in lexicographic grid order
// with entry 0 most significant. Throws SearchSpaceTooLarge past kSearchCap or
// for the full shape beyond n = 2.
std::vector<OperatorOnTensorSquare> search_solutions(const Matrix& mu, const std::vector<Scalar>& coefficients,
                                                     SearchShape shape, unsigned threads = 1);

}  // namespace homlong

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlong/matrix.hpp"
#include "homlong/report.hpp"

namespace homlong {

// Structure maps are stored as matrices acting on column vectors:
//   mult   : dim × dim²   (column i·dim+j holds e_i e_j)
//   comult : dim² × dim   (column i holds Δ(e_i))
//   unit   : coordinates of 1
//   counit : ε as a covector
struct HomAlgebra {
  std::size_t dim = 0;
  Matrix mult;
  Vector unit;
  Matrix twist;  // α
  std::vector<std::string> basis;
};

struct HomCoalgebra {
  std::size_t dim = 0;
  Matrix comult;
  Vector counit;
  Matrix twist;  // β
  std::vector<std::string> basis;
};

// A Hom-bialgebra with one twist γ shared by the algebra and coalgebra parts.
// It is a Hom-Hopf algebra exactly when `antipode` is set.
struct HomBialgebra {
  std::size_t dim = 0;
  Matrix mult;
  Vector unit;
  Matrix comult;
  Vector counit;
  Matrix twist;
  std::optional<Matrix> antipode;
  std::vector<std::string> basis;

  HomAlgebra algebra() const { return {dim, mult, unit, twist, basis}; }
  HomCoalgebra coalgebra() const { return {dim, comult, counit, twist, basis}; }
  bool is_hopf() const { return antipode.has_value(); }
  const Matrix& S() const;  // throws MissingAntipode

  friend bool operator==(const HomBialgebra& a, const HomBialgebra& b) {
    return a.dim == b.dim && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
           a.counit == b.counit && a.twist == b.twist && a.antipode == b.antipode;
  }
};

void check_shape(const HomAlgebra& a);
void check_shape(const HomCoalgebra& c);
void check_shape(const HomBialgebra& h);

std::vector<std::string> default_basis(const std::string& stem, std::size_t dim);

AxiomReport validate_hom_algebra(const HomAlgebra& a);
AxiomReport validate_hom_coalgebra(const HomCoalgebra& c);
// The four compatibility identities only.
AxiomReport validate_hom_bialgebra(const HomBialgebra& h);
// Antipode identities and S∘γ = γ∘S; invertibility of S is an informational line.
AxiomReport validate_hom_hopf(const HomBialgebra& h);
// Algebra, coalgebra (twist invertibility reported once), bialgebra and,
// when an antipode is present, Hopf lines.
AxiomReport validate_tower(const HomBialgebra& h);

// Multiplication of the tensor-product algebra A⊗A, as a map A⁴ -> A².
Matrix tensor_square_mult(const Matrix& mult, std::size_t dim);
// Comultiplication of the tensor-product coalgebra C⊗C, as a map C² -> C⁴.
Matrix tensor_square_comult(const Matrix& comult, std::size_t dim);

// Yau twist of a classical (γ = id) bialgebra along an automorphism φ:
// mult' = φ∘mult, Δ' = Δ∘φ, γ' = φ, S' = S.
HomBialgebra yau_twist(const HomBialgebra& h, const Matrix& phi);
HomAlgebra opposite_algebra(const HomAlgebra& a);
// Dual Hom-bialgebra on the coordinate dual basis.
HomBialgebra dual_hopf(const HomBialgebra& b);
HomBialgebra tensor_hopf(const HomBialgebra& h, const HomBialgebra& b);
HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b);

// R ∈ H⊗H stored as R(i,j) = coefficient of e_i⊗e_j.
Matrix element_column(const Matrix& r);           // dim²×1
Matrix element_from_column(const Matrix& col, std::size_t dim);
Matrix form_row(const Matrix& form);              // 1×dim²
Matrix flip_element(const Matrix& r);

struct QuasiTriangularStructure {
  Matrix R;
  bool triangular = false;
  AxiomReport report;
};

struct CoQuasiTriangularStructure {
  Matrix form;
  bool cotriangular = false;
  AxiomReport report;
};

// QHA1..QHA5 plus an informational "triangular" line.
AxiomReport validate_quasitriangular(const HomBialgebra& h, const Matrix& r);
// CHA1..CHA5 plus an informational "cotriangular" line.
AxiomReport validate_coquasitriangular(const HomBialgebra& b, const Matrix& form);

QuasiTriangularStructure make_quasitriangular(const HomBialgebra& h, const Matrix& r);
CoQuasiTriangularStructure make_coquasitriangular(const HomBialgebra& b, const Matrix& form);

// Two-sided inverse of an element of H⊗H for the componentwise product.
// Throws NoInverse when none exists or it is not unique.
Matrix convolution_inverse(const HomBialgebra& h, const Matrix& r);

}  // namespace homlong

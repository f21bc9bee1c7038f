#pragma once

#include "homlong/dimodule.hpp"

namespace homlong::fixtures {

// The one-dimensional Hopf algebra k.
HomBialgebra ground();
// Group algebra of the cyclic group of order n, basis 1, g, ..., g^{n-1}.
HomBialgebra cyclic_group(std::size_t n);
// The Hopf automorphism g -> g^m of k[Z_n] (m coprime to n).
Matrix cyclic_power_map(std::size_t n, std::size_t m);
// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.
HomBialgebra sweedler();
// The Hopf automorphism g -> g, x -> λx of the Sweedler algebra.
Matrix sweedler_scaling(const Scalar& lambda);
// Yau twist of k[Z_4] along g -> g^3.
HomBialgebra twisted_z4();
HomBialgebra twisted_sweedler(const Scalar& lambda = Scalar(-1));
// k[Z_2 x Z_2] as the tensor product of two copies of k[Z_2].
HomBialgebra klein();

Matrix r_trivial(const HomBialgebra& h);  // 1⊗1
// ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) on k[Z_2].
Matrix r_z2();
// The same element supported on the subgroup {1, g²} of k[Z_4].
Matrix r_z4();
// ½(1⊗1+1⊗g+g⊗1−g⊗g) + (λ/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx) on the Sweedler algebra.
Matrix r_sweedler(const Scalar& lambda);
// r_z2 placed on the first Z_2 factor on the left and the second on the right;
// quasitriangular but not triangular.
Matrix r_klein_mixed();

Matrix form_trivial(const HomBialgebra& b);  // ε⊗ε
// ⟨g|g⟩ = −1, all other basis pairings 1, on k[Z_2].
Matrix form_z2();
// ⟨g^a|g^b⟩ = (−1)^{ab} on k[Z_4].
Matrix form_z4();
// ⟨(a1,a2)|(b1,b2)⟩ = (−1)^{a1·b2} on k[Z_2 x Z_2]; not cotriangular.
Matrix form_klein_mixed();

// Over H = B = k[Z_2]: g·v = −c v, ρ(v) = g⊗c v, structure map c.
HomLongDimodule sign_dimodule(const Scalar& c = Scalar(1));
// g·v = −v on k[Z_2] with identity structure map.
HomModule sign_module();
// ρ(v) = g⊗v over k[Z_2] with identity structure map.
HomComodule sign_comodule();

}  // namespace homlong::fixtures

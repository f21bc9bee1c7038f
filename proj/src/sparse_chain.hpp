#pragma once

// Composites of Kronecker products and leg permutations, evaluated one basis
// vector at a time on sparse vectors. Used where the dense composite would pass
// the matrix size limit.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homlong/matrix.hpp"
#include "homlong/report.hpp"

namespace homlong::sparse {

using Vec = std::map<std::size_t, Scalar>;
using Columns = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

Columns columns(const Matrix& m);

class Stage {
 public:
  // f₁⊗…⊗fₖ, first factor on the most significant legs.
  static Stage kron(const std::vector<Matrix>& factors);
  // Output leg t is input leg order[t].
  static Stage permute(std::vector<std::size_t> dims, std::vector<std::size_t> order);

  Vec apply(const Vec& in) const;
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }

 private:
  struct Factor {
    std::size_t rows, cols;
    Columns cols_of;
  };
  std::vector<Factor> factors_;
  std::vector<std::size_t> dims_, order_;
  bool is_permutation_ = false;
  std::size_t in_dim_ = 1, out_dim_ = 1;
};

// Stages listed as in compose(): the last one acts first.
Vec evaluate(const std::vector<Stage>& chain, std::size_t index);

// Same witness and detail conventions as compare_maps.
AxiomCheck compare(std::string id, const std::vector<Stage>& lhs, const std::vector<Stage>& rhs,
                   const std::vector<std::size_t>& domain_dims);

}  // namespace homlong::sparse

#include "sparse_chain.hpp"

#include "homlong/error.hpp"

namespace homlong::sparse {

Columns columns(const Matrix& m) {
  Columns cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) cols[c].emplace_back(r, m(r, c));
  return cols;
}

Stage Stage::kron(const std::vector<Matrix>& factors) {
  Stage s;
  for (const Matrix& f : factors) {
    s.factors_.push_back({f.rows(), f.cols(), columns(f)});
    s.in_dim_ *= f.cols();
    s.out_dim_ *= f.rows();
  }
  return s;
}

Stage Stage::permute(std::vector<std::size_t> dims, std::vector<std::size_t> order) {
  if (dims.size() != order.size()) throw Error(ErrorKind::DimensionMismatch, "leg permutation arity");
  std::vector<bool> seen(dims.size(), false);
  for (auto o : order) {
    if (o >= dims.size() || seen[o]) throw Error(ErrorKind::DimensionMismatch, "not a permutation of legs");
    seen[o] = true;
  }
  Stage s;
  s.is_permutation_ = true;
  for (auto d : dims) s.in_dim_ *= d;
  s.out_dim_ = s.in_dim_;
  s.dims_ = std::move(dims);
  s.order_ = std::move(order);
  return s;
}

Vec Stage::apply(const Vec& in) const {
  Vec out;
  if (is_permutation_) {
    const std::size_t r = dims_.size();
    std::vector<std::size_t> out_dims(r), out_idx(r);
    for (std::size_t t = 0; t < r; ++t) out_dims[t] = dims_[order_[t]];
    for (const auto& [idx, c] : in) {
      const auto legs = unflatten(idx, dims_);
      for (std::size_t t = 0; t < r; ++t) out_idx[t] = legs[order_[t]];
      out[flatten(out_idx, out_dims)] += c;
    }
    return out;
  }
  std::vector<std::pair<std::size_t, Scalar>> partial, next;
  for (const auto& [idx, c] : in) {
    // split idx into one column per factor, last factor least significant
    std::vector<std::size_t> part(factors_.size());
    std::size_t rest = idx;
    for (std::size_t f = factors_.size(); f-- > 0;) {
      part[f] = rest % factors_[f].cols;
      rest /= factors_[f].cols;
    }
    partial.assign(1, {0, c});
    for (std::size_t f = 0; f < factors_.size() && !partial.empty(); ++f) {
      next.clear();
      for (const auto& [o, k] : partial)
        for (const auto& [r, a] : factors_[f].cols_of[part[f]]) next.emplace_back(o * factors_[f].rows + r, k * a);
      partial.swap(next);
    }
    for (const auto& [o, k] : partial) out[o] += k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Vec evaluate(const std::vector<Stage>& chain, std::size_t index) {
  Vec v{{index, Scalar(1)}};
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) v = it->apply(v);
  return v;
}

namespace {

std::string dense_text(const Vec& v, std::size_t dim) {
  std::string s = "[";
  for (std::size_t i = 0; i < dim; ++i) {
    auto it = v.find(i);
    s += (i ? " " : "") + (it == v.end() ? std::string("0") : it->second.str());
  }
  return s + "]";
}

std::string sparse_text(const Vec& v) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, c] : v) {
    s += (first ? "" : " ") + std::to_string(i) + ":" + c.str();
    first = false;
  }
  return s + "}";
}

}  // namespace

AxiomCheck compare(std::string id, const std::vector<Stage>& lhs, const std::vector<Stage>& rhs,
                   const std::vector<std::size_t>& domain_dims) {
  if (lhs.empty() || rhs.empty()) throw Error(ErrorKind::DimensionMismatch, id + ": empty composite");
  const std::size_t domain = lhs.back().in_dim(), codomain = lhs.front().out_dim();
  if (rhs.back().in_dim() != domain || rhs.front().out_dim() != codomain)
    throw Error(ErrorKind::DimensionMismatch, id + ": composites have different shapes");
  for (std::size_t i = 0; i + 1 < lhs.size(); ++i)
    if (lhs[i].in_dim() != lhs[i + 1].out_dim()) throw Error(ErrorKind::DimensionMismatch, id + ": stage shapes");
  for (std::size_t i = 0; i + 1 < rhs.size(); ++i)
    if (rhs[i].in_dim() != rhs[i + 1].out_dim()) throw Error(ErrorKind::DimensionMismatch, id + ": stage shapes");

  for (std::size_t idx = 0; idx < domain; ++idx) {
    const Vec l = evaluate(lhs, idx), r = evaluate(rhs, idx);
    if (l == r) continue;
    std::string detail = codomain <= 64 ? "lhs " + dense_text(l, codomain) + " != rhs " + dense_text(r, codomain)
                                        : "lhs " + sparse_text(l) + " != rhs " + sparse_text(r);
    if (detail.size() > 400) detail = detail.substr(0, 400) + "...";
    return {std::move(id), false, unflatten(idx, domain_dims), std::move(detail), false};
  }
  return {std::move(id), true, {}, "", false};
}

}  // namespace homlong::sparse

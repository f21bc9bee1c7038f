#include "homlong/report.hpp"

#include <stdexcept>

#include "homlong/error.hpp"

namespace homlong {

void AxiomReport::pass(std::string id, std::string detail) {
  checks_.push_back({std::move(id), true, {}, std::move(detail), false});
}

void AxiomReport::fail(std::string id, std::vector<std::size_t> witness, std::string detail) {
  checks_.push_back({std::move(id), false, std::move(witness), std::move(detail), false});
}

void AxiomReport::info(std::string id, bool value, std::string detail) {
  checks_.push_back({std::move(id), value, {}, std::move(detail), true});
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks_)
    if (!c.informational && !c.passed) return false;
  return true;
}

const AxiomCheck* AxiomReport::find(std::string_view id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool AxiomReport::passed(std::string_view id) const {
  const AxiomCheck* c = find(id);
  if (!c) throw std::out_of_range("no check named " + std::string(id));
  return c->passed;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.informational && !c.passed) return &c;
  return nullptr;
}

std::string format_witness(const std::vector<std::size_t>& witness) {
  std::string s = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(witness[i]);
  }
  return s + ")";
}

AxiomCheck compare_maps(std::string id, const Matrix& lhs, const Matrix& rhs,
                        std::vector<std::size_t> domain_dims) {
  auto col = first_differing_column(lhs, rhs);
  if (!col) return {std::move(id), true, {}, "", false};
  std::vector<std::size_t> witness = unflatten(*col, domain_dims);
  std::string detail = "lhs [";
  for (std::size_t r = 0; r < lhs.rows(); ++r) detail += (r ? " " : "") + lhs(r, *col).str();
  detail += "] != rhs [";
  for (std::size_t r = 0; r < rhs.rows(); ++r) detail += (r ? " " : "") + rhs(r, *col).str();
  detail += "]";
  if (detail.size() > 400) detail = detail.substr(0, 400) + "...";
  return {std::move(id), false, std::move(witness), std::move(detail), false};
}

}  // namespace homlong

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "homlong/matrix.hpp"

namespace homlong {

struct AxiomCheck {
  std::string id;
  bool passed = false;
  // Basis indices of the input tuple on which the identity fails (empty on pass
  // or when the identity has no inputs).
  std::vector<std::size_t> witness;
  std::string detail;
  // Informational lines are reported but do not count towards all_passed().
  bool informational = false;
};

class AxiomReport {
 public:
  void add(AxiomCheck check) { checks_.push_back(std::move(check)); }
  void pass(std::string id, std::string detail = "");
  void fail(std::string id, std::vector<std::size_t> witness, std::string detail = "");
  void info(std::string id, bool value, std::string detail = "");
  void append(const AxiomReport& other, const std::string& prefix = "");

  bool all_passed() const;
  const std::vector<AxiomCheck>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }
  const AxiomCheck* find(std::string_view id) const;
  // Verdict of a named check; throws std::out_of_range if absent.
  bool passed(std::string_view id) const;
  const AxiomCheck* first_failure() const;

 private:
  std::vector<AxiomCheck> checks_;
};

// Compare two maps with the same domain (a tensor product with the given leg
// dimensions); on mismatch the witness is the first differing basis tuple.
AxiomCheck compare_maps(std::string id, const Matrix& lhs, const Matrix& rhs,
                        std::vector<std::size_t> domain_dims);

std::string format_witness(const std::vector<std::size_t>& witness);

}  // namespace homlong

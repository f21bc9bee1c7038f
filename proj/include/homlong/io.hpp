#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "homlong/braiding.hpp"
#include "homlong/long_equation.hpp"

namespace homlong::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Scalars are JSON integers or "p/q" strings.
Scalar scalar_from_json(const Json& j, const std::string& where);
Json to_json(const Scalar& s);
Matrix matrix_from_json(const Json& j, const std::string& where);
Json to_json(const Matrix& m);
Vector vector_from_json(const Json& j, const std::string& where);
Json to_json(const Vector& v);
Tensor3 tensor_from_json(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2, const std::string& where);
Json to_json(const Tensor3& t);

// Throws ParseError with the line and column of the first syntax error.
Json read_json_file(const fs::path& path);
void write_json_file(const fs::path& path, const Json& j);

// "hom-algebra", "hom-coalgebra", "hom-bialgebra", "hom-hopf", "hom-module",
// "hom-comodule", "yd-module", "long-dimodule", "halpha-dimodule", "operator",
// "context"; from the `kind` field when present, else from the fields used.
std::string detect_kind(const Json& j);

struct AlgebraDocument {
  std::string kind;
  HomBialgebra algebra;  // parts absent from the file are left empty
  std::optional<Matrix> R;
  std::optional<Matrix> form;
};

struct ModuleDocument {
  AlgebraRef over;
  HomModule module;
};

struct ComoduleDocument {
  AlgebraRef over;
  HomComodule comodule;
};

struct YDDocument {
  AlgebraRef over;
  YetterDrinfeldModule yd;
};

// `base` is the directory against which string references are resolved.
AlgebraDocument parse_algebra(const Json& j, const fs::path& base = {});
// A string is a path to an algebra file, an object an inline algebra.
AlgebraRef algebra_ref(const Json& j, const fs::path& base, const std::string& where);
ModuleDocument parse_module(const Json& j, const fs::path& base = {});
ComoduleDocument parse_comodule(const Json& j, const fs::path& base = {});
YDDocument parse_yd(const Json& j, const fs::path& base = {});
HomLongDimodule parse_dimodule(const Json& j, const fs::path& base = {});
HAlphaLongDimodule parse_halpha(const Json& j, const fs::path& base = {});
OperatorOnTensorSquare parse_operator(const Json& j);
struct ContextDocument {
  AlgebraRef H;
  Matrix R;
  AlgebraRef B;
  Matrix form;
};
// R and form fall back to the fields of the H and B files.
ContextDocument parse_context_document(const Json& j, const fs::path& base = {});
// Validates through make_context.
BraidingContext parse_context(const Json& j, const fs::path& base = {});
// A bare 2D array or an object holding one under `key`.
Matrix parse_matrix_file(const Json& j, const std::string& key);

Json to_json(const HomBialgebra& h, const std::string& kind, const std::optional<Matrix>& r = std::nullopt,
             const std::optional<Matrix>& form = std::nullopt);
Json to_json(const HomModule& m, const Json& over);
Json to_json(const HomComodule& m, const Json& over);
Json to_json(const HomLongDimodule& m);
Json to_json(const HAlphaLongDimodule& m);
Json to_json(const OperatorOnTensorSquare& r);
// A map with basis labels for its source and target.
Json map_to_json(const Matrix& m, const std::vector<std::string>& source, const std::vector<std::string>& target);

std::vector<std::string> tensor_basis(const std::vector<std::string>& a, const std::vector<std::string>& b);

template <class T>
T load(const fs::path& path, T (*parse)(const Json&, const fs::path&)) {
  return parse(read_json_file(path), path.parent_path());
}

}  // namespace homlong::io

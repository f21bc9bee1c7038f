#include "homlong/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "homlong/error.hpp"

namespace homlong::io {

namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::DimensionMismatch, where + ": " + what);
}

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t count_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    parse_error(where + "/" + key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::vector<std::string> basis_field(const Json& j, std::size_t dim, const std::string& stem,
                                     const std::string& where) {
  auto it = j.find("basis");
  if (it == j.end()) return default_basis(stem, dim);
  if (!it->is_array() || it->size() != dim) shape_error(where + "/basis", "expected " + std::to_string(dim) + " names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(*it)[i].is_string()) parse_error(where + "/basis/" + std::to_string(i), "expected a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

Matrix require_size(Matrix m, std::size_t rows, std::size_t cols, const std::string& where) {
  if (m.rows() != rows || m.cols() != cols)
    shape_error(where, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m;
}

Matrix sized_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  return require_size(matrix_from_json(j, where), rows, cols, where);
}

Vector sized_vector(const Json& j, std::size_t dim, const std::string& where) {
  Vector v = vector_from_json(j, where);
  if (v.dim() != dim) shape_error(where, "expected " + std::to_string(dim) + " entries");
  return v;
}

// A matrix given inline or as a path to a matrix file.
Matrix matrix_ref(const Json& j, const fs::path& base, const char* key, const std::string& where) {
  if (j.is_string()) return parse_matrix_file(read_json_file(base / j.get<std::string>()), key);
  return matrix_from_json(j, where);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
  }
  parse_error(where, "expected an integer or a \"p/q\" string");
}

Json to_json(const Scalar& s) {
  if (s.is_integer() && s.numerator().fits_slong_p()) return Json(s.numerator().get_si());
  return Json(s.str());
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = where + "/" + std::to_string(r);
    if (!j[r].is_array()) parse_error(at, "expected a row");
    if (j[r].size() != cols) shape_error(at, "row has " + std::to_string(j[r].size()) + " entries, expected " +
                                                 std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], at + "/" + std::to_string(c));
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i], where + "/" + std::to_string(i));
  return v;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& s : v.entries()) out.push_back(to_json(s));
  return out;
}

Tensor3 tensor_from_json(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2, const std::string& where) {
  Tensor3 t(d0, d1, d2);
  if (!j.is_array() || j.size() != d0) shape_error(where, "expected " + std::to_string(d0) + " slices");
  for (std::size_t i = 0; i < d0; ++i) {
    const std::string wi = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != d1) shape_error(wi, "expected " + std::to_string(d1) + " rows");
    for (std::size_t k = 0; k < d1; ++k) {
      const std::string wk = wi + "/" + std::to_string(k);
      if (!j[i][k].is_array() || j[i][k].size() != d2) shape_error(wk, "expected " + std::to_string(d2) + " entries");
      for (std::size_t l = 0; l < d2; ++l) t(i, k, l) = scalar_from_json(j[i][k][l], wk + "/" + std::to_string(l));
    }
  }
  return t;
}

Json to_json(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.d0(); ++i) {
    Json slice = Json::array();
    for (std::size_t k = 0; k < t.d1(); ++k) {
      Json row = Json::array();
      for (std::size_t l = 0; l < t.d2(); ++l) row.push_back(to_json(t(i, k, l)));
      slice.push_back(std::move(row));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte ? e.byte - 1 : 0);
    throw Error(ErrorKind::ParseError,
                path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

void write_json_file(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path.string() + ": cannot write");
  out << j.dump(2) << "\n";
}

std::string detect_kind(const Json& j) {
  static const std::vector<std::string> kinds = {"hom-algebra",   "hom-coalgebra", "hom-bialgebra",
                                                 "hom-hopf",      "hom-module",    "hom-comodule",
                                                 "yd-module",     "long-dimodule", "halpha-dimodule",
                                                 "operator",      "context"};
  if (!j.is_object()) parse_error("/", "expected an object");
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string() || std::find(kinds.begin(), kinds.end(), it->get<std::string>()) == kinds.end())
      parse_error("/kind", "unknown kind");
    return it->get<std::string>();
  }
  auto has = [&](const char* k) { return j.contains(k); };
  if (has("n") && has("matrix")) return "operator";
  if (has("H") && has("B") && (has("R") || has("form"))) return "context";
  if (has("H") && has("B")) return "long-dimodule";
  if (has("H") && has("action") && has("coaction")) return "halpha-dimodule";
  if (has("over")) {
    if (has("structure_map")) return "yd-module";
    if (has("action")) return "hom-module";
    if (has("coaction")) return "hom-comodule";
  }
  if (has("mult") && has("comult")) return has("antipode") ? "hom-hopf" : "hom-bialgebra";
  if (has("mult")) return "hom-algebra";
  if (has("comult")) return "hom-coalgebra";
  parse_error("/", "cannot determine the kind of this file");
}

AlgebraDocument parse_algebra(const Json& j, const fs::path& base) {
  AlgebraDocument doc;
  doc.kind = detect_kind(j);
  const bool has_alg = doc.kind == "hom-algebra" || doc.kind == "hom-bialgebra" || doc.kind == "hom-hopf";
  const bool has_coalg = doc.kind == "hom-coalgebra" || doc.kind == "hom-bialgebra" || doc.kind == "hom-hopf";
  if (!has_alg && !has_coalg) parse_error("/kind", "'" + doc.kind + "' is not an algebra kind");
  HomBialgebra& h = doc.algebra;
  const std::size_t d = h.dim = count_field(j, "dim", "");
  h.basis = basis_field(j, d, "e", "");
  h.twist = j.contains("gamma") ? sized_matrix(j["gamma"], d, d, "/gamma") : Matrix::identity(d);
  if (has_alg) {
    h.mult = binary_map(tensor_from_json(field(j, "mult", ""), d, d, d, "/mult"));
    h.unit = sized_vector(field(j, "unit", ""), d, "/unit");
  }
  if (has_coalg) {
    h.comult = split_map(tensor_from_json(field(j, "comult", ""), d, d, d, "/comult"));
    h.counit = sized_vector(field(j, "counit", ""), d, "/counit");
  }
  if (doc.kind == "hom-hopf") h.antipode = sized_matrix(field(j, "antipode", ""), d, d, "/antipode");
  if (j.contains("R")) doc.R = require_size(matrix_ref(j["R"], base, "R", "/R"), d, d, "/R");
  if (j.contains("form")) doc.form = require_size(matrix_ref(j["form"], base, "form", "/form"), d, d, "/form");
  return doc;
}

AlgebraRef algebra_ref(const Json& j, const fs::path& base, const std::string& where) {
  if (j.is_string()) {
    const fs::path p = base / j.get<std::string>();
    try {
      return share(parse_algebra(read_json_file(p), p.parent_path()).algebra);
    } catch (const Error& e) {
      throw Error(e.kind(), where + " -> " + e.what());
    }
  }
  if (j.is_object()) return share(parse_algebra(j, base).algebra);
  parse_error(where, "expected a path or an inline algebra");
}

ModuleDocument parse_module(const Json& j, const fs::path& base) {
  ModuleDocument doc;
  doc.over = algebra_ref(field(j, "over", ""), base, "/over");
  HomModule& m = doc.module;
  const std::size_t d = doc.over->dim, n = m.dim = count_field(j, "dim", "");
  m.basis = basis_field(j, n, "m", "");
  m.action = binary_map(tensor_from_json(field(j, "action", ""), d, n, n, "/action"));
  m.nu = sized_matrix(field(j, "nu", ""), n, n, "/nu");
  return doc;
}

ComoduleDocument parse_comodule(const Json& j, const fs::path& base) {
  ComoduleDocument doc;
  doc.over = algebra_ref(field(j, "over", ""), base, "/over");
  HomComodule& m = doc.comodule;
  const std::size_t d = doc.over->dim, n = m.dim = count_field(j, "dim", "");
  m.basis = basis_field(j, n, "m", "");
  m.coaction = split_map(tensor_from_json(field(j, "coaction", ""), n, d, n, "/coaction"));
  m.mu = sized_matrix(field(j, "mu", ""), n, n, "/mu");
  return doc;
}

YDDocument parse_yd(const Json& j, const fs::path& base) {
  YDDocument doc;
  doc.over = algebra_ref(field(j, "over", ""), base, "/over");
  YetterDrinfeldModule& m = doc.yd;
  const std::size_t d = doc.over->dim, n = m.dim = count_field(j, "dim", "");
  m.basis = basis_field(j, n, "m", "");
  m.action = binary_map(tensor_from_json(field(j, "action", ""), d, n, n, "/action"));
  m.coaction = split_map(tensor_from_json(field(j, "coaction", ""), n, d, n, "/coaction"));
  m.structure_map = sized_matrix(field(j, "structure_map", ""), n, n, "/structure_map");
  return doc;
}

HomLongDimodule parse_dimodule(const Json& j, const fs::path& base) {
  HomLongDimodule m;
  m.H = algebra_ref(field(j, "H", ""), base, "/H");
  m.B = algebra_ref(field(j, "B", ""), base, "/B");
  const std::size_t n = m.dim = count_field(j, "dim", "");
  m.basis = basis_field(j, n, "m", "");
  m.action = binary_map(tensor_from_json(field(j, "action", ""), m.H->dim, n, n, "/action"));
  m.coaction = split_map(tensor_from_json(field(j, "coaction", ""), n, m.B->dim, n, "/coaction"));
  m.mu = sized_matrix(field(j, "mu", ""), n, n, "/mu");
  return m;
}

HAlphaLongDimodule parse_halpha(const Json& j, const fs::path& base) {
  HAlphaLongDimodule m;
  m.H = algebra_ref(field(j, "H", ""), base, "/H");
  const std::size_t d = m.H->dim, n = m.dim = count_field(j, "dim", "");
  m.basis = basis_field(j, n, "m", "");
  m.action = binary_map(tensor_from_json(field(j, "action", ""), d, n, n, "/action"));
  m.coaction = split_map(tensor_from_json(field(j, "coaction", ""), n, d, n, "/coaction"));
  m.mu = sized_matrix(field(j, "mu", ""), n, n, "/mu");
  return m;
}

OperatorOnTensorSquare parse_operator(const Json& j) {
  OperatorOnTensorSquare r;
  r.n = count_field(j, "n", "");
  r.mu = sized_matrix(field(j, "mu", ""), r.n, r.n, "/mu");
  r.matrix = sized_matrix(field(j, "matrix", ""), r.n * r.n, r.n * r.n, "/matrix");
  r.classical = r.mu.is_identity();
  return r;
}

ContextDocument parse_context_document(const Json& j, const fs::path& base) {
  auto load_side = [&](const char* key) {
    const Json& ref = field(j, key, "");
    if (ref.is_string()) {
      const fs::path p = base / ref.get<std::string>();
      return parse_algebra(read_json_file(p), p.parent_path());
    }
    return parse_algebra(ref, base);
  };
  AlgebraDocument h = load_side("H");
  AlgebraDocument b = load_side("B");
  std::optional<Matrix> r = j.contains("R") ? std::optional(matrix_ref(j["R"], base, "R", "/R")) : h.R;
  std::optional<Matrix> form = j.contains("form") ? std::optional(matrix_ref(j["form"], base, "form", "/form")) : b.form;
  if (!r) parse_error("/R", "no R given in the context or in H");
  if (!form) parse_error("/form", "no form given in the context or in B");
  return {share(std::move(h.algebra)), *r, share(std::move(b.algebra)), *form};
}

BraidingContext parse_context(const Json& j, const fs::path& base) {
  ContextDocument doc = parse_context_document(j, base);
  return make_context(doc.H, doc.R, doc.B, doc.form);
}

Matrix parse_matrix_file(const Json& j, const std::string& key) {
  if (j.is_array()) return matrix_from_json(j, "");
  if (j.is_object() && j.contains(key)) return matrix_from_json(j[key], "/" + key);
  if (j.is_object() && j.contains("matrix")) return matrix_from_json(j["matrix"], "/matrix");
  parse_error("/", "expected a matrix or an object with '" + key + "'");
}

Json to_json(const HomBialgebra& h, const std::string& kind, const std::optional<Matrix>& r,
             const std::optional<Matrix>& form) {
  Json j;
  j["kind"] = kind;
  j["dim"] = h.dim;
  j["basis"] = h.basis;
  if (h.mult.cols() != 0) {
    j["mult"] = to_json(binary_tensor(h.mult, h.dim, h.dim));
    j["unit"] = to_json(h.unit);
  }
  if (h.comult.rows() != 0) {
    j["comult"] = to_json(split_tensor(h.comult, h.dim, h.dim));
    j["counit"] = to_json(h.counit);
  }
  if (h.antipode) j["antipode"] = to_json(*h.antipode);
  j["gamma"] = to_json(h.twist);
  if (r) j["R"] = to_json(*r);
  if (form) j["form"] = to_json(*form);
  return j;
}

namespace {

std::string kind_of(const HomBialgebra& h) {
  if (h.antipode) return "hom-hopf";
  if (h.mult.cols() != 0 && h.comult.rows() != 0) return "hom-bialgebra";
  return h.mult.cols() != 0 ? "hom-algebra" : "hom-coalgebra";
}

}  // namespace

Json to_json(const HomModule& m, const Json& over) {
  Json j;
  j["kind"] = "hom-module";
  j["over"] = over;
  j["dim"] = m.dim;
  j["basis"] = m.basis;
  j["action"] = to_json(binary_tensor(m.action, m.action.cols() / m.dim, m.dim));
  j["nu"] = to_json(m.nu);
  return j;
}

Json to_json(const HomComodule& m, const Json& over) {
  Json j;
  j["kind"] = "hom-comodule";
  j["over"] = over;
  j["dim"] = m.dim;
  j["basis"] = m.basis;
  j["coaction"] = to_json(split_tensor(m.coaction, m.coaction.rows() / m.dim, m.dim));
  j["mu"] = to_json(m.mu);
  return j;
}

Json to_json(const HomLongDimodule& m) {
  Json j;
  j["kind"] = "long-dimodule";
  j["H"] = to_json(*m.H, kind_of(*m.H));
  j["B"] = to_json(*m.B, kind_of(*m.B));
  j["dim"] = m.dim;
  j["basis"] = m.basis;
  j["action"] = to_json(binary_tensor(m.action, m.H->dim, m.dim));
  j["coaction"] = to_json(split_tensor(m.coaction, m.B->dim, m.dim));
  j["mu"] = to_json(m.mu);
  return j;
}

Json to_json(const HAlphaLongDimodule& m) {
  Json j;
  j["kind"] = "halpha-dimodule";
  j["H"] = to_json(*m.H, kind_of(*m.H));
  j["dim"] = m.dim;
  j["basis"] = m.basis;
  j["action"] = to_json(binary_tensor(m.action, m.H->dim, m.dim));
  j["coaction"] = to_json(split_tensor(m.coaction, m.H->dim, m.dim));
  j["mu"] = to_json(m.mu);
  return j;
}

Json to_json(const OperatorOnTensorSquare& r) {
  Json j;
  j["kind"] = "operator";
  j["n"] = r.n;
  j["mu"] = to_json(r.mu);
  j["matrix"] = to_json(r.matrix);
  return j;
}

Json map_to_json(const Matrix& m, const std::vector<std::string>& source, const std::vector<std::string>& target) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["source_basis"] = source;
  j["target_basis"] = target;
  j["matrix"] = to_json(m);
  return j;
}

std::vector<std::string> tensor_basis(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "⊗" + y);
  return out;
}

}  // namespace homlong::io

#include "homlong/scalar.hpp"

#include <ostream>

#include "homlong/error.hpp"

namespace homlong {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::MissingAntipode: return "MissingAntipode";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::MismatchedBase: return "MismatchedBase";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Error";
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::SingularMatrix, "division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' )
    throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(num.begin());
  if (den[0] == '+') den.erase(den.begin());
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace homlong

#include "postulatum/rational.hpp"

#include <cctype>

#include "postulatum/errors.hpp"

namespace postulatum {

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string token(text);
  if (token.find_first_of(".eE") != std::string::npos) {
    throw GeometryError(ErrorCode::Parse,
                        "'" + token + "' is not a rational; decimals are rejected, write p/q instead");
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_token(num, true) || (slash != std::string_view::npos && !is_integer_token(den, false))) {
    throw GeometryError(ErrorCode::Parse, "'" + token + "' is not of the form p or p/q");
  }
  Rational r;
  r.get_num() = Integer(std::string(num));
  r.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (r.get_den() == 0) {
    throw GeometryError(ErrorCode::Parse, "'" + token + "' has a zero denominator");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace postulatum

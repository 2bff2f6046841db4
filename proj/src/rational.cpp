#include "tvb/rational.hpp"

#include <cctype>

namespace tvb {

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num(s.substr(0, i));
  std::string den = "1";
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) return std::nullopt;
    den = std::string(s.substr(den_begin));
  }
  mpz_class n(num), d(den);
  if (sgn(d) <= 0) return std::nullopt;  // catches "p/0"
  return Rational(n, d);
}

}  // namespace tvb

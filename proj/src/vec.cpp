#include "tvb/vec.hpp"

namespace tvb {

namespace {
void check_same_size(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw InputError("vector size mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
}
}  // namespace

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  check_same_size(a, b);
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec add(std::span<const Rational> a, std::span<const Rational> b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(std::span<const Rational> a, std::span<const Rational> b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scaled(std::span<const Rational> a, const Rational& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Rational norm_sq(std::span<const Rational> a) {
  Rational acc;
  for (const auto& x : a) acc += x * x;
  return acc;
}

std::string vec_str(std::span<const Rational> a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a[i].str();
  }
  out += ")";
  return out;
}

}  // namespace tvb

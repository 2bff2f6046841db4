#include "tvb/hyperplane.hpp"

#include "tvb/vec.hpp"

namespace tvb {

Rational Hyperplane::evaluate(std::span<const Rational> p) const {
  return dot(normal, p) - offset;
}

std::vector<mpz_class> canonical_key(const Hyperplane& h) {
  // Entries (a_1, ..., a_d, -c) over a common denominator, then divide by
  // the gcd and fix the sign of the first nonzero entry.
  const std::size_t d = h.normal.size();
  mpz_class lcm_den = 1;
  for (const auto& a : h.normal) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.den().get_mpz_t());
  mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), h.offset.den().get_mpz_t());

  std::vector<mpz_class> key(d + 1);
  for (std::size_t i = 0; i < d; ++i)
    key[i] = h.normal[i].num() * (lcm_den / h.normal[i].den());
  key[d] = -h.offset.num() * (lcm_den / h.offset.den());

  mpz_class g = 0;
  for (const auto& k : key) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
  if (g == 0) return key;  // all-zero (invalid hyperplane, but keep total)
  for (auto& k : key) mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), g.get_mpz_t());

  for (const auto& k : key) {
    if (k != 0) {
      if (k < 0)
        for (auto& e : key) e = -e;
      break;
    }
  }
  return key;
}

bool same_locus(const Hyperplane& a, const Hyperplane& b) {
  if (a.normal.size() != b.normal.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

void ColoredArrangement::validate() const {
  if (dimension < 2) throw InputError("dimension must be at least 2");
  if (parts < 2) throw InputError("parts must be at least 2");
  if (classes.size() != dimension + 1)
    throw InputError("expected " + std::to_string(dimension + 1) + " classes, got " +
                     std::to_string(classes.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].size() != parts)
      throw InputError("class " + std::to_string(c) + " has " +
                       std::to_string(classes[c].size()) + " hyperplanes, expected " +
                       std::to_string(parts));
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      const Hyperplane& h = classes[c][i];
      if (h.normal.size() != dimension)
        throw InputError("hyperplane (" + std::to_string(c) + "," + std::to_string(i) +
                         ") has normal of length " + std::to_string(h.normal.size()));
      bool all_zero = true;
      for (const auto& a : h.normal)
        if (!a.is_zero()) { all_zero = false; break; }
      if (all_zero)
        throw InputError("hyperplane (" + std::to_string(c) + "," + std::to_string(i) +
                         ") has zero normal");
    }
  }
  if (!labels.empty() && labels.size() != classes.size())
    throw InputError("labels must be empty or one per class");
}

std::vector<Hyperplane> ColoredArrangement::union_hyperplanes() const {
  std::vector<Hyperplane> out;
  out.reserve(classes.size() * parts);
  for (const auto& cls : classes)
    for (const auto& h : cls) out.push_back(h);
  return out;
}

}  // namespace tvb

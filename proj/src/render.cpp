#include "tvb/render.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "tvb/linalg.hpp"

namespace tvb {

namespace {

// x scaled by 10^9 and rounded half away from zero, printed with exactly
// nine fractional digits.
std::string decimal9(const Rational& x) {
  mpz_class num = x.num() * mpz_class(1000000000);
  const mpz_class& den = x.den();
  const bool neg = num < 0;
  mpz_class a = abs(num);
  mpz_class q = (2 * a + den) / (2 * den);
  std::string digits = q.get_str();
  if (digits.size() < 10) digits.insert(0, 10 - digits.size(), '0');
  std::string out;
  if (neg && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - 9);
  out.push_back('.');
  out += digits.substr(digits.size() - 9);
  return out;
}

bool lex_less(const Vec& a, const Vec& b) {
  if (a[0] < b[0]) return true;
  if (b[0] < a[0]) return false;
  return a[1] < b[1];
}

struct Segment {
  Vec a, b;
};

// Exact clip of the line to the window: intersect with each edge line,
// keep hits inside the closed window, endpoints are the lexicographic
// extremes.  Lines missing the window (or touching a single corner) give
// nothing.
std::optional<Segment> clip_line(const Hyperplane& line, const RenderWindow& w) {
  const Hyperplane edges[4] = {
      {{Rational(1), Rational(0)}, w.xmin},
      {{Rational(1), Rational(0)}, w.xmax},
      {{Rational(0), Rational(1)}, w.ymin},
      {{Rational(0), Rational(1)}, w.ymax},
  };
  std::vector<Vec> hits;
  for (const auto& e : edges) {
    std::vector<Hyperplane> sys = {line, e};
    auto p = solve_linear(sys);
    if (!p) continue;
    const Vec& v = *p;
    if (v[0] < w.xmin || w.xmax < v[0] || v[1] < w.ymin || w.ymax < v[1]) continue;
    bool dup = false;
    for (const auto& h : hits)
      if (h == v) {
        dup = true;
        break;
      }
    if (!dup) hits.push_back(v);
  }
  if (hits.size() < 2) return std::nullopt;
  Segment s{hits[0], hits[0]};
  for (const auto& h : hits) {
    if (lex_less(h, s.a)) s.a = h;
    if (lex_less(s.b, h)) s.b = h;
  }
  return s;
}

}  // namespace

std::string render_svg(const ColoredArrangement& arr, const RenderWindow& window) {
  arr.validate();
  if (arr.dimension != 2) throw InputError("rendering supports dimension 2 only");
  if (!(window.xmin < window.xmax) || !(window.ymin < window.ymax))
    throw InputError("render window is empty");

  const Rational scale(100);
  auto sx = [&](const Rational& x) { return decimal9((x - window.xmin) * scale); };
  auto sy = [&](const Rational& y) { return decimal9((window.ymax - y) * scale); };

  static const char* kColors[3] = {"red", "green", "blue"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << decimal9((window.xmax - window.xmin) * scale) << "\" height=\""
      << decimal9((window.ymax - window.ymin) * scale) << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t c = 0; c < arr.class_count(); ++c) {
    const char* color = kColors[c % 3];
    std::map<std::vector<mpz_class>, std::size_t> seen;
    std::vector<std::pair<const Hyperplane*, std::size_t>> groups;  // first occurrence order
    for (const auto& h : arr.classes[c]) {
      auto key = canonical_key(h);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(std::move(key), groups.size());
        groups.emplace_back(&h, 1);
      } else {
        ++groups[it->second].second;
      }
    }
    for (const auto& [h, count] : groups) {
      auto seg = clip_line(*h, window);
      if (!seg) continue;
      svg << "  <line x1=\"" << sx(seg->a[0]) << "\" y1=\"" << sy(seg->a[1]) << "\" x2=\""
          << sx(seg->b[0]) << "\" y2=\"" << sy(seg->b[1]) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
      if (count > 1) {
        Rational half(1, 2);
        Rational mx = (seg->a[0] + seg->b[0]) * half;
        Rational my = (seg->a[1] + seg->b[1]) * half;
        svg << "  <text x=\"" << decimal9((mx - window.xmin) * scale + Rational(4))
            << "\" y=\"" << decimal9((window.ymax - my) * scale - Rational(4))
            << "\" fill=\"" << color << "\" font-size=\"14\">×" << count << "</text>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tvb

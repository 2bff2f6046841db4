#include "tvb/perturb.hpp"

#include <random>
#include <vector>

#include "tvb/linalg.hpp"
#include "tvb/position.hpp"
#include "tvb/subsets.hpp"

namespace tvb {

namespace {

bool all_normals_nonzero(const ColoredArrangement& arr) {
  for (const auto& cls : arr.classes)
    for (const auto& h : cls) {
      bool nonzero = false;
      for (const auto& a : h.normal)
        if (!a.is_zero()) {
          nonzero = true;
          break;
        }
      if (!nonzero) return false;
    }
  return true;
}

// Visits every vertex cut out by one hyperplane from each of d distinct
// classes, in both arrangements, and tracks the largest squared move.
// Returns false when some cross-class subset went singular.
bool vertex_moves_below(const ColoredArrangement& before, const ColoredArrangement& after,
                        const Rational& delta_sq, Rational& max_move_sq) {
  const std::size_t d = before.dimension;
  const std::size_t k = before.class_count();
  max_move_sq = Rational(0);
  bool ok = true;
  for_all_subsets(k, d, [&](const std::vector<std::size_t>& cls) {
    std::vector<std::size_t> pick(d, 0);
    while (true) {
      std::vector<Hyperplane> sys_before, sys_after;
      sys_before.reserve(d);
      sys_after.reserve(d);
      for (std::size_t i = 0; i < d; ++i) {
        sys_before.push_back(before.classes[cls[i]][pick[i]]);
        sys_after.push_back(after.classes[cls[i]][pick[i]]);
      }
      auto vb = solve_linear(sys_before);
      auto va = solve_linear(sys_after);
      if (!vb || !va) {
        ok = false;
        return false;
      }
      Rational move(0);
      for (std::size_t i = 0; i < d; ++i) move = move + ((*va)[i] - (*vb)[i]).squared();
      if (max_move_sq < move) max_move_sq = move;
      if (!(move < delta_sq)) {
        ok = false;
        return false;
      }
      std::size_t level = d;
      while (level > 0) {
        --level;
        if (++pick[level] < before.parts) break;
        pick[level] = 0;
        if (level == 0) return true;
      }
    }
  });
  return ok;
}

}  // namespace

PerturbationReport perturb_to_general_position(const ColoredArrangement& arr,
                                               std::uint64_t seed, unsigned budget) {
  arr.validate();
  RefutationReport base = verify_colorful_refutation(arr);
  if (base.verdict != Verdict::Refuted)
    throw InputError("perturbation requires an arrangement whose partitions are all refuted");
  const Rational delta_sq = base.min_margin_sq;

  // First magnitude keeps every tilt well under delta: coordinates move by
  // at most 1/2^k each, so squared vertex motion starts a few octaves down.
  unsigned k0 = 4;
  {
    Rational quarter_pow(1, 4);
    Rational target = delta_sq / Rational(64);
    unsigned k = 1;
    Rational v = quarter_pow;
    while (!(v <= target) && k < 64) {
      v = v * quarter_pow;
      ++k;
    }
    if (k > k0) k0 = k;
  }

  PerturbationReport report;
  report.delta_sq = delta_sq;
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    const unsigned k = k0 + attempt;
    std::mt19937_64 gen(seed + 0x9E3779B97F4A7C15ULL * (k + 1));
    Rational scale = Rational(1) / Rational(mpz_class(mpz_class(1) << k));

    ColoredArrangement tilted = arr;
    for (auto& cls : tilted.classes)
      for (auto& h : cls) {
        for (auto& a : h.normal) {
          int t = static_cast<int>(gen() % 2001) - 1000;
          a = a + scale * Rational(t, 1000);
        }
        int t = static_cast<int>(gen() % 2001) - 1000;
        h.offset = h.offset + scale * Rational(t, 1000);
      }

    ++report.attempts;
    if (!all_normals_nonzero(tilted)) continue;
    if (!general_position(tilted)) continue;
    Rational max_move_sq;
    if (!vertex_moves_below(arr, tilted, delta_sq, max_move_sq)) continue;
    RefutationReport check = verify_colorful_refutation(tilted);
    if (check.verdict != Verdict::Refuted) continue;

    report.perturbed = std::move(tilted);
    report.max_vertex_move_sq = max_move_sq;
    report.magnitude_exponent = k;
    report.verification = std::move(check);
    return report;
  }
  throw PerturbBudgetExhausted("no admissible perturbation found within budget");
}

}  // namespace tvb

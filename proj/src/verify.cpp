#include "tvb/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "tvb/linalg.hpp"
#include "tvb/position.hpp"

namespace tvb {

namespace {

unsigned env_thread_count() {
  const char* s = std::getenv("TVERBERG_THREADS");
  if (!s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1 || v > 256) return 1;
  return static_cast<unsigned>(v);
}

PartitionOutcome check_partition(const ColoredArrangement& arr, const PartitionTypeClass& t) {
  PartitionOutcome o;
  o.partition = t.representative;
  o.multiplicity = t.multiplicity;
  auto simplices = partition_simplices(arr, t.representative);
  const std::size_t r = simplices.size();
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t jp = j + 1; jp < r; ++jp) {
      auto res = hulls_intersect(simplices[j].vertices, simplices[jp].vertices);
      if (!res.intersect) {
        o.disjoint_found = true;
        o.pair_j = j;
        o.pair_jp = jp;
        o.certificate = std::move(res.certificate);
        o.pair_dist_sq = std::move(res.pair_dist_sq);
        o.intersections.clear();
        return o;
      }
      o.intersections.push_back({j, jp, std::move(res.witness)});
    }
  }
  return o;
}

}  // namespace

std::vector<Hyperplane> tuple_hyperplanes(const ColoredArrangement& arr,
                                          const ColorfulTuple& t) {
  if (t.picks.size() != arr.class_count())
    throw InputError("tuple picks one hyperplane per class");
  std::vector<Hyperplane> hs;
  hs.reserve(t.picks.size());
  for (std::size_t c = 0; c < t.picks.size(); ++c) {
    if (t.picks[c] >= arr.classes[c].size())
      throw InputError("pick out of range in class " + std::to_string(c));
    hs.push_back(arr.classes[c][t.picks[c]]);
  }
  return hs;
}

std::vector<Simplex> partition_simplices(const ColoredArrangement& arr,
                                         const ColorfulPartition& p) {
  std::vector<Simplex> out;
  out.reserve(p.parts.size());
  for (const auto& part : p.parts) out.push_back(induced_simplex(tuple_hyperplanes(arr, part)));
  return out;
}

RefutationReport verify_colorful_refutation(const ColoredArrangement& arr,
                                            bool up_to_symmetry, unsigned threads) {
  arr.validate();
  if (!weak_general_position(arr))
    throw InputError("arrangement is not in weak general position");

  auto types = enumerate_colorful(arr, up_to_symmetry);

  RefutationReport rep;
  rep.type_class_count = types.size();
  rep.raw_count = raw_colorful_count(arr.parts, arr.dimension);

  if (threads == 0) threads = env_thread_count();
  threads = std::max<unsigned>(1, std::min<unsigned>(threads, types.size()));

  std::vector<PartitionOutcome> outcomes(types.size());
  auto work = [&](unsigned begin) {
    for (std::size_t i = begin; i < types.size(); i += threads)
      outcomes[i] = check_partition(arr, types[i]);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work, k);
    work(0);
    for (auto& th : pool) th.join();
  }

  std::size_t cut = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].disjoint_found) {
      cut = i;
      break;
    }
  }

  if (cut == outcomes.size()) {
    rep.verdict = Verdict::Refuted;
    rep.partitions = std::move(outcomes);
  } else {
    rep.verdict = Verdict::NotRefuted;
    outcomes.resize(cut + 1);
    rep.partitions = std::move(outcomes);
  }

  bool have_min = false;
  for (const auto& o : rep.partitions) {
    if (!o.disjoint_found) continue;
    if (!have_min || o.certificate.margin_sq < rep.min_margin_sq)
      rep.min_margin_sq = o.certificate.margin_sq;
    if (!have_min || o.pair_dist_sq < rep.min_pair_dist_sq)
      rep.min_pair_dist_sq = o.pair_dist_sq;
    have_min = true;
  }
  return rep;
}

Rational max_projection_deviation(std::size_t d, const EpsilonChoice& eps) {
  if (d < 3) throw InputError("deviation check needs d >= 3");
  const Rational& e = eps.value;

  Rational worst(0);
  // Sign pattern: bits 0..d-1 pick the offset of X_1..X_d (set = -1), bit d
  // picks the mixed hyperplane (set = minority, lambda3 = +1).
  for (unsigned pattern = 0; pattern < (1u << (d + 1)); ++pattern) {
    std::vector<Rational> lam(d);
    for (std::size_t i = 0; i < d; ++i)
      lam[i] = (pattern >> i) & 1u ? Rational(-1) : Rational(1);
    const bool minority = (pattern >> d) & 1u;
    const Rational lam3 = minority ? Rational(1) : Rational(-1);

    std::vector<Hyperplane> tuple;
    for (std::size_t i = 0; i < d; ++i) {
      Vec n(d, Rational(0));
      n[i] = Rational(1);
      tuple.push_back({std::move(n), lam[i]});
    }
    Vec mixed(d, e);
    mixed[0] = Rational(1);
    mixed[1] = -lam3;
    tuple.push_back({std::move(mixed), Rational(0)});

    // Model triangle vertex for each omitted hyperplane.
    std::vector<Vec> model(d + 1);
    model[0] = {lam3 * lam[1], lam[1]};
    model[1] = {lam[0], lam3 * lam[0]};
    for (std::size_t k = 2; k <= d; ++k) model[k] = {lam[0], lam[1]};

    for (std::size_t omit = 0; omit <= d; ++omit) {
      std::vector<Hyperplane> sub;
      for (std::size_t i = 0; i <= d; ++i)
        if (i != omit) sub.push_back(tuple[i]);
      auto v = solve_linear(sub);
      if (!v) throw ConstructionError("family tuple has a singular d-subset");
      Rational dx = ((*v)[0] - model[omit][0]).abs();
      Rational dy = ((*v)[1] - model[omit][1]).abs();
      const Rational& dev = dx < dy ? dy : dx;
      if (worst < dev) worst = dev;
    }
  }
  return worst;
}

bool projection_deviation_within_bound(std::size_t d, const EpsilonChoice& eps) {
  Rational bound = eps.value * Rational(static_cast<long>(d - 2));
  return !(bound < max_projection_deviation(d, eps));
}

}  // namespace tvb

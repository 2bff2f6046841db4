#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvb/constructions.hpp"
#include "tvb/io.hpp"
#include "tvb/karasev.hpp"
#include "tvb/perturb.hpp"
#include "tvb/render.hpp"
#include "tvb/verify.hpp"

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    tvb::write_text_file(path, text);
}

void emit_json(const std::string& path, const tvb::json& doc) {
  emit(path, doc.dump(2) + "\n");
}

tvb::ColoredArrangement load_arrangement(const std::string& path) {
  return tvb::arrangement_from_json(tvb::parse_json(tvb::read_text_file(path)));
}

tvb::RenderWindow parse_window(const std::string& spec) {
  std::vector<std::string> parts(1);
  for (char ch : spec) {
    if (ch == ',')
      parts.emplace_back();
    else
      parts.back().push_back(ch);
  }
  if (parts.size() != 4) throw tvb::InputError("window must be xmin,xmax,ymin,ymax");
  tvb::RenderWindow w;
  w.xmin = tvb::parse_rational(parts[0]);
  w.xmax = tvb::parse_rational(parts[1]);
  w.ymin = tvb::parse_rational(parts[2]);
  w.ymax = tvb::parse_rational(parts[3]);
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for Tverberg-type partitions of hyperplane arrangements"};
  app.require_subcommand(1);

  std::size_t r = 0, d = 0;
  std::string epsilon_str, input, output, report_path, window_str;
  std::string mode = "colorful";
  std::uint64_t seed = 0;
  unsigned budget = 32;
  bool up_to_symmetry = true;
  bool pairwise = false;

  auto* gen = app.add_subcommand("generate", "Construct an arrangement document");
  gen->require_subcommand(1);
  auto* gen_planar = gen->add_subcommand("planar", "Planar family (d=2): r per class");
  gen_planar->add_option("--r", r, "hyperplanes per class")->required();
  gen_planar->add_option("--output,-o", output, "output path (stdout if omitted)");
  auto* gen_highdim = gen->add_subcommand("highdim", "Tilted family for d >= 3");
  gen_highdim->add_option("--d", d, "ambient dimension")->required();
  gen_highdim->add_option("--r", r, "hyperplanes per class")->required();
  gen_highdim->add_option("--epsilon", epsilon_str,
                          "tilt coefficient as a rational p/q (default 1/(4(d-2)))");
  gen_highdim->add_option("--output,-o", output, "output path (stdout if omitted)");
  auto* gen_random = gen->add_subcommand("random", "Seeded random general-position arrangement");
  gen_random->add_option("--d", d, "ambient dimension")->required();
  gen_random->add_option("--r", r, "hyperplanes per class")->required();
  gen_random->add_option("--seed", seed, "RNG seed")->required();
  gen_random->add_option("--output,-o", output, "output path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Verify partition properties of an arrangement");
  verify->add_option("--input,-i", input, "arrangement document")->required();
  verify->add_option("--mode", mode, "colorful or monochromatic (default colorful)")
      ->check(CLI::IsMember({"colorful", "monochromatic"}));
  verify->add_option("--output,-o", output, "report path (stdout if omitted)");
  verify->add_option("--up-to-symmetry", up_to_symmetry,
                     "merge partitions differing by identical hyperplanes (default true)");
  verify->add_flag("--pairwise", pairwise,
                   "monochromatic mode: require only pairwise intersection");

  auto* render = app.add_subcommand("render", "Render a planar arrangement to SVG");
  render->add_option("--input,-i", input, "arrangement document")->required();
  render->add_option("--output,-o", output, "SVG path (stdout if omitted)");
  render->add_option("--window", window_str, "xmin,xmax,ymin,ymax (default -3,3,-3,3)");

  auto* perturb =
      app.add_subcommand("perturb", "Nudge into general position, preserving refutation");
  perturb->add_option("--input,-i", input, "arrangement document")->required();
  perturb->add_option("--seed", seed, "RNG seed")->required();
  perturb->add_option("--output,-o", output, "perturbed arrangement path")->required();
  perturb->add_option("--report", report_path, "perturbation report path (stdout if omitted)");
  perturb->add_option("--budget", budget, "tilt magnitudes to try before giving up");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_planar->parsed()) {
      emit_json(output, tvb::arrangement_to_json(tvb::planar_counterexample(r)));
      return 0;
    }
    if (gen_highdim->parsed()) {
      tvb::EpsilonChoice eps =
          epsilon_str.empty() ? tvb::EpsilonChoice::default_for(d)
                              : tvb::EpsilonChoice::checked(d, tvb::parse_rational(epsilon_str));
      emit_json(output, tvb::arrangement_to_json(tvb::highdim_counterexample(d, r, eps)));
      return 0;
    }
    if (gen_random->parsed()) {
      emit_json(output, tvb::arrangement_to_json(tvb::random_arrangement(d, r, seed)));
      return 0;
    }
    if (verify->parsed()) {
      auto arr = load_arrangement(input);
      if (mode == "colorful") {
        auto rep = tvb::verify_colorful_refutation(arr, up_to_symmetry);
        emit_json(output, tvb::refutation_report_to_json(rep, arr, up_to_symmetry));
        const bool refuted = rep.verdict == tvb::Verdict::Refuted;
        std::cerr << (refuted ? "refuted" : "not-refuted") << ": " << rep.type_class_count
                  << " partition types, " << rep.raw_count << " raw\n";
        return refuted ? 0 : 1;
      }
      auto hs = arr.union_hyperplanes();
      auto w = pairwise ? tvb::verify_monochromatic_pairwise(hs, arr.parts)
                        : tvb::verify_monochromatic(hs, arr.parts);
      emit_json(output, tvb::monochromatic_report_to_json(w, arr, pairwise));
      std::cerr << (w.found ? "witness-found" : "exhausted") << " after " << w.partitions_tried
                << " partitions\n";
      return w.found ? 0 : 1;
    }
    if (render->parsed()) {
      auto arr = load_arrangement(input);
      tvb::RenderWindow w = window_str.empty() ? tvb::RenderWindow{} : parse_window(window_str);
      emit(output, tvb::render_svg(arr, w));
      return 0;
    }
    if (perturb->parsed()) {
      auto arr = load_arrangement(input);
      auto rep = tvb::perturb_to_general_position(arr, seed, budget);
      emit_json(output, tvb::arrangement_to_json(rep.perturbed));
      emit_json(report_path, tvb::perturbation_report_to_json(rep, arr, seed));
      std::cerr << "perturbed with tilt 1/2^" << rep.magnitude_exponent << " after "
                << rep.attempts << " attempt(s)\n";
      return 0;
    }
  } catch (const tvb::PerturbBudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tvb/karasev.hpp"
#include "tvb/perturb.hpp"
#include "tvb/verify.hpp"

namespace tvb {

using json = nlohmann::ordered_json;

// Rational::parse that throws InputError instead of returning nullopt.
Rational parse_rational(const std::string& s);

// Arrangement documents: {format_version, dimension, parts, labels?,
// classes: [[{normal: ["p" | "p/q", ...], offset: "p/q"}, ...], ...]}.
json arrangement_to_json(const ColoredArrangement& arr);
ColoredArrangement arrangement_from_json(const json& doc);

// "fnv1a64:" + 16 hex digits over the compact serialization; reports embed
// it so a certificate can be traced back to its exact input.
std::string arrangement_hash(const ColoredArrangement& arr);
std::uint64_t fnv1a64(const std::string& bytes);

json refutation_report_to_json(const RefutationReport& report, const ColoredArrangement& arr,
                               bool up_to_symmetry);
json monochromatic_report_to_json(const MonochromaticWitness& witness,
                                  const ColoredArrangement& arr, bool pairwise);
json perturbation_report_to_json(const PerturbationReport& report,
                                 const ColoredArrangement& original, std::uint64_t seed);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// dump(2) with a trailing newline.
void write_json_file(const std::string& path, const json& doc);
json parse_json(const std::string& text);

}  // namespace tvb

#include "tvb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tvb/version.hpp"

namespace tvb {

Rational parse_rational(const std::string& s) {
  auto r = Rational::parse(s);
  if (!r) throw InputError("invalid rational \"" + s + "\"");
  return *r;
}

namespace {

json rational_array(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json hyperplane_to_json(const Hyperplane& h) {
  json j;
  j["normal"] = rational_array(h.normal);
  j["offset"] = h.offset.str();
  return j;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

Rational rational_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) throw InputError(std::string("field \"") + name + "\" must be a string");
  return parse_rational(f.get<std::string>());
}

Vec vec_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_array()) throw InputError(std::string("field \"") + name + "\" must be an array");
  Vec out;
  out.reserve(f.size());
  for (const auto& e : f) {
    if (!e.is_string())
      throw InputError(std::string("field \"") + name + "\" must hold rational strings");
    out.push_back(parse_rational(e.get<std::string>()));
  }
  return out;
}

std::size_t size_field(const json& doc, const char* name) {
  const json& f = field(doc, name);
  if (!f.is_number_unsigned())
    throw InputError(std::string("field \"") + name + "\" must be a nonnegative integer");
  return f.get<std::size_t>();
}

json partition_to_json(const ColorfulPartition& p) {
  json parts = json::array();
  for (const auto& t : p.parts) parts.push_back(t.picks);
  return parts;
}

json certificate_to_json(const SeparationCertificate& c) {
  json j;
  j["separator"] = hyperplane_to_json(c.separator);
  j["margin_sq"] = c.margin_sq.str();
  j["hull1_side"] = c.hull1_side;
  return j;
}

json report_header(const char* mode, const ColoredArrangement& arr) {
  json j;
  j["format_version"] = kFormatVersion;
  j["tool_version"] = kToolVersion;
  j["mode"] = mode;
  j["input_hash"] = arrangement_hash(arr);
  return j;
}

}  // namespace

json arrangement_to_json(const ColoredArrangement& arr) {
  json j;
  j["format_version"] = kFormatVersion;
  j["dimension"] = arr.dimension;
  j["parts"] = arr.parts;
  if (!arr.labels.empty()) j["labels"] = arr.labels;
  json classes = json::array();
  for (const auto& cls : arr.classes) {
    json c = json::array();
    for (const auto& h : cls) c.push_back(hyperplane_to_json(h));
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

ColoredArrangement arrangement_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("arrangement document must be a JSON object");
  const json& ver = field(doc, "format_version");
  if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion)
    throw InputError("unsupported format_version");
  ColoredArrangement arr;
  arr.dimension = size_field(doc, "dimension");
  arr.parts = size_field(doc, "parts");
  const json& classes = field(doc, "classes");
  if (!classes.is_array()) throw InputError("field \"classes\" must be an array");
  for (const auto& cls : classes) {
    if (!cls.is_array()) throw InputError("each class must be an array of hyperplanes");
    std::vector<Hyperplane> out;
    out.reserve(cls.size());
    for (const auto& h : cls) {
      if (!h.is_object()) throw InputError("each hyperplane must be an object");
      out.push_back(Hyperplane{vec_field(h, "normal"), rational_field(h, "offset")});
    }
    arr.classes.push_back(std::move(out));
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) throw InputError("field \"labels\" must be an array");
    for (const auto& l : *it) {
      if (!l.is_string()) throw InputError("labels must be strings");
      arr.labels.push_back(l.get<std::string>());
    }
  }
  arr.validate();
  return arr;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string arrangement_hash(const ColoredArrangement& arr) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(arrangement_to_json(arr).dump())));
  return std::string("fnv1a64:") + buf;
}

json refutation_report_to_json(const RefutationReport& report, const ColoredArrangement& arr,
                               bool up_to_symmetry) {
  json j = report_header("colorful", arr);
  j["up_to_symmetry"] = up_to_symmetry;
  const bool refuted = report.verdict == Verdict::Refuted;
  j["verdict"] = refuted ? "refuted" : "not-refuted";
  j["raw_partition_count"] = report.raw_count;
  j["type_class_count"] = report.type_class_count;
  if (refuted) {
    j["min_margin_sq"] = report.min_margin_sq.str();
    j["min_pair_dist_sq"] = report.min_pair_dist_sq.str();
  } else {
    j["min_margin_sq"] = nullptr;
    j["min_pair_dist_sq"] = nullptr;
  }
  json parts = json::array();
  for (const auto& o : report.partitions) {
    json rec;
    rec["partition"] = partition_to_json(o.partition);
    rec["multiplicity"] = o.multiplicity;
    if (o.disjoint_found) {
      rec["disjoint_pair"] = {o.pair_j, o.pair_jp};
      rec["pair_dist_sq"] = o.pair_dist_sq.str();
      rec["certificate"] = certificate_to_json(o.certificate);
    } else {
      json xs = json::array();
      for (const auto& w : o.intersections) {
        json x;
        x["pair"] = {w.j, w.jp};
        x["point"] = rational_array(w.witness.point);
        x["coeffs1"] = rational_array(w.witness.coeffs1);
        x["coeffs2"] = rational_array(w.witness.coeffs2);
        xs.push_back(std::move(x));
      }
      rec["intersections"] = std::move(xs);
    }
    parts.push_back(std::move(rec));
  }
  j["partitions"] = std::move(parts);
  return j;
}

json monochromatic_report_to_json(const MonochromaticWitness& witness,
                                  const ColoredArrangement& arr, bool pairwise) {
  json j = report_header("monochromatic", arr);
  j["pairwise"] = pairwise;
  j["r"] = arr.parts;
  j["verdict"] = witness.found ? "witness-found" : "exhausted";
  j["partitions_tried"] = witness.partitions_tried;
  if (witness.found) {
    json blocks = json::array();
    for (const auto& b : witness.blocks) blocks.push_back(b);
    j["blocks"] = std::move(blocks);
    if (!witness.point.empty()) j["common_point"] = rational_array(witness.point);
    if (!witness.coefficients.empty()) {
      json cs = json::array();
      for (const auto& c : witness.coefficients) cs.push_back(rational_array(c));
      j["coefficients"] = std::move(cs);
    }
  } else {
    j["note"] =
        "no block partition admits a common point; for prime-power r this "
        "contradicts the splitting theorem and indicates an implementation bug";
  }
  return j;
}

json perturbation_report_to_json(const PerturbationReport& report,
                                 const ColoredArrangement& original, std::uint64_t seed) {
  json j;
  j["format_version"] = kFormatVersion;
  j["tool_version"] = kToolVersion;
  j["mode"] = "perturb";
  j["input_hash"] = arrangement_hash(original);
  j["output_hash"] = arrangement_hash(report.perturbed);
  j["seed"] = seed;
  j["delta_sq"] = report.delta_sq.str();
  j["max_vertex_move_sq"] = report.max_vertex_move_sq.str();
  j["attempts"] = report.attempts;
  j["magnitude_exponent"] = report.magnitude_exponent;
  j["verification"] = refutation_report_to_json(report.verification, report.perturbed, true);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw InputError("cannot read " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out.good()) throw InputError("cannot write " + path);
}

void write_json_file(const std::string& path, const json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("invalid JSON");
  return doc;
}

}  // namespace tvb

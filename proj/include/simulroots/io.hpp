#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simulroots/certify.hpp"
#include "simulroots/localize.hpp"
#include "simulroots/poly.hpp"
#include "simulroots/simul.hpp"

namespace simulroots::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits, "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x, int significant = 17);

/// Accepts a JSON number or a decimal string (including "inf").
double parse_number(const Json& j);
Complex parse_complex(const Json& j);
Json complex_to_json(Complex z, int significant = 17);

/// {"degree": n, "coeffs": [[re, im], ...]} with coeffs low-to-high, length n.
MonicPolynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const MonicPolynomial& f);

/// {"points": [[re, im], ...]} or a bare array of pairs.
ApproximationVector points_from_json(const Json& j);
Json points_to_json(const ApproximationVector& z);

Json certificate_to_json(const Certificate& c);
/// [{"center": [re, im], "radius": r}, ...]
Json disks_to_json(const std::vector<InclusionDisk>& disks);

struct CorpusInstance {
  std::string name;
  std::string description;
  std::vector<std::string> tags;  // e.g. "certified", "double-root", "clustered"
  MonicPolynomial polynomial;
  std::optional<std::vector<Complex>> roots;
  std::vector<std::pair<std::string, ApproximationVector>> initial_points;

  bool has_tag(const std::string& tag) const;
  const ApproximationVector& point(const std::string& name) const;
};

/// {"name", "description", "tags", "polynomial", "roots", "initial_points": {name: [[re, im], ...]}}
CorpusInstance corpus_instance_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);

/// Every *.json file in the directory, sorted by file name.
std::vector<CorpusInstance> load_corpus(const std::filesystem::path& dir);

}  // namespace simulroots::io

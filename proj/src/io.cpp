#include "simulroots/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "simulroots/errors.hpp"

namespace simulroots::io {

namespace {
Error parse_error(const std::string& what) { return Error(ErrorKind::parse_error, what); }
}  // namespace

std::string format_double(double x, int significant) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

double parse_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return v;
  }
  throw parse_error("expected a number, got " + j.dump());
}

Complex parse_complex(const Json& j) {
  if (j.is_array() && j.size() == 2) return {parse_number(j[0]), parse_number(j[1])};
  if (j.is_number() || j.is_string()) return {parse_number(j), 0.0};
  throw parse_error("expected [re, im], got " + j.dump());
}

Json complex_to_json(Complex z, int significant) {
  return Json::array({format_double(z.real(), significant), format_double(z.imag(), significant)});
}

MonicPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw parse_error("polynomial needs \"coeffs\"");
  const auto& c = j.at("coeffs");
  if (!c.is_array()) throw parse_error("\"coeffs\" must be an array");
  std::vector<Complex> coeffs;
  for (const auto& e : c) coeffs.push_back(parse_complex(e));
  if (j.contains("degree")) {
    if (!j.at("degree").is_number_integer() ||
        j.at("degree").get<long>() != static_cast<long>(coeffs.size())) {
      throw parse_error("\"degree\" must equal the number of coefficients");
    }
  }
  if (coeffs.size() < 2) throw parse_error("degree must be >= 2");
  return MonicPolynomial(std::move(coeffs));
}

Json polynomial_to_json(const MonicPolynomial& f) {
  Json coeffs = Json::array();
  for (const Complex c : f.coefficients()) coeffs.push_back(complex_to_json(c));
  Json j;
  j["degree"] = f.degree();
  j["coeffs"] = std::move(coeffs);
  return j;
}

ApproximationVector points_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("points") : j;
  if (!arr.is_array()) throw parse_error("points must be an array of [re, im]");
  std::vector<Complex> pts;
  for (const auto& e : arr) pts.push_back(parse_complex(e));
  return ApproximationVector(std::move(pts));
}

Json points_to_json(const ApproximationVector& z) {
  Json arr = Json::array();
  for (const Complex c : z.points()) arr.push_back(complex_to_json(c));
  return arr;
}

namespace {
Json optional_number(const std::optional<double>& v) {
  return v ? Json(format_double(*v)) : Json(nullptr);
}
}  // namespace

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["method"] = to_string(c.kind);
  j["n"] = c.params.n;
  j["p"] = c.params.norm.to_string();
  j["a"] = format_double(c.params.a);
  j["b"] = format_double(c.params.b);
  j["m"] = format_double(c.params.m);
  j["E0"] = format_double(c.E0);
  j["domain_bound"] = format_double(c.domain_bound);
  j["lambda"] = optional_number(c.lambda);
  j["theta"] = optional_number(c.theta);
  j["mu0"] = optional_number(c.mu0);
  if (c.kind == CertificateKind::localization) j["disk_ratio"] = optional_number(c.disk_ratio);
  j["satisfied"] = c.satisfied;
  j["strict"] = c.strict;
  j["degenerate"] = c.degenerate;
  j["guaranteed_order"] = c.guaranteed_order;
  return j;
}

Json disks_to_json(const std::vector<InclusionDisk>& disks) {
  Json arr = Json::array();
  for (const auto& d : disks) {
    Json e;
    e["center"] = complex_to_json(d.center);
    e["radius"] = format_double(d.radius);
    arr.push_back(std::move(e));
  }
  return arr;
}

bool CorpusInstance::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const ApproximationVector& CorpusInstance::point(const std::string& point_name) const {
  for (const auto& [n, z] : initial_points) {
    if (n == point_name) return z;
  }
  throw parse_error("instance " + name + " has no initial point '" + point_name + "'");
}

CorpusInstance corpus_instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("polynomial")) throw parse_error("corpus entry needs \"polynomial\"");
  CorpusInstance inst{j.value("name", std::string{}), j.value("description", std::string{}), {},
                      polynomial_from_json(j.at("polynomial")), std::nullopt, {}};
  if (j.contains("tags")) inst.tags = j.at("tags").get<std::vector<std::string>>();
  if (j.contains("roots") && !j.at("roots").is_null()) {
    std::vector<Complex> r;
    for (const auto& e : j.at("roots")) r.push_back(parse_complex(e));
    inst.roots = std::move(r);
  }
  if (j.contains("initial_points")) {
    for (const auto& [key, value] : j.at("initial_points").items()) {
      inst.initial_points.emplace_back(key, points_from_json(value));
    }
  }
  return inst;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

std::vector<CorpusInstance> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusInstance> out;
  for (const auto& f : files) {
    auto inst = corpus_instance_from_json(read_json_file(f));
    if (inst.name.empty()) inst.name = f.stem().string();
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace simulroots::io

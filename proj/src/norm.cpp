#include "simulroots/norm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "simulroots/errors.hpp"

namespace simulroots {

NormParameter::NormParameter(double p) : p_(p) {
  if (!(p >= 1.0)) throw domain_error("norm exponent p must lie in [1, inf]");
}

NormParameter NormParameter::infinity() {
  return NormParameter(std::numeric_limits<double>::infinity());
}

NormParameter NormParameter::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  double p = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::parse_error, "bad norm exponent '" + std::string(text) + "'");
  }
  return NormParameter(p);
}

bool NormParameter::is_infinite() const noexcept { return std::isinf(p_); }

double NormParameter::q() const noexcept {
  if (is_infinite()) return 1.0;
  if (p_ == 1.0) return std::numeric_limits<double>::infinity();
  return p_ / (p_ - 1.0);
}

double NormParameter::inv_p() const noexcept { return is_infinite() ? 0.0 : 1.0 / p_; }
double NormParameter::inv_q() const noexcept { return 1.0 - inv_p(); }

double NormParameter::pow_inv_p(double x) const noexcept {
  if (is_infinite()) return 1.0;
  if (p_ == 1.0) return x;
  return std::pow(x, inv_p());
}

double NormParameter::pow_inv_q(double x) const noexcept {
  if (p_ == 1.0) return 1.0;
  if (is_infinite()) return x;
  return std::pow(x, inv_q());
}

double NormParameter::norm(std::span<const double> v) const noexcept {
  if (v.empty()) return 0.0;
  const double big = *std::max_element(v.begin(), v.end());
  if (is_infinite() || big == 0.0 || std::isinf(big)) return big;
  if (p_ == 1.0) {
    double s = 0.0;
    for (const double x : v) s += x;
    return s;
  }
  // Scaled by the largest entry to keep x^p in range.
  double s = 0.0;
  for (const double x : v) s += std::pow(x / big, p_);
  return big * std::pow(s, 1.0 / p_);
}

std::string NormParameter::to_string() const {
  if (is_infinite()) return "inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, p_);
  return std::string(buf, res.ptr);
}

}  // namespace simulroots

#pragma once

#include <span>
#include <string>
#include <string_view>

namespace simulroots {

/// The exponent p in [1, inf] of the norm used throughout, together with its
/// dual q (1/p + 1/q = 1).
///
/// Every x^{1/p} and x^{1/q} in the certificate formulas goes through
/// pow_inv_p / pow_inv_q, so the degenerate exponents live here only:
/// q = inf gives x^{1/q} = 1 and p = inf gives x^{1/p} = 1 for x > 0.
class NormParameter {
 public:
  /// Throws DomainError unless p >= 1 (p may be +infinity).
  explicit NormParameter(double p);

  static NormParameter infinity();
  /// Accepts a number >= 1 or "inf"/"infinity".
  static NormParameter parse(std::string_view text);

  double p() const noexcept { return p_; }
  double q() const noexcept;
  bool is_infinite() const noexcept;
  bool is_one() const noexcept { return p_ == 1.0; }

  /// 1/p and 1/q, with 1/inf = 0.
  double inv_p() const noexcept;
  double inv_q() const noexcept;

  double pow_inv_p(double x) const noexcept;
  double pow_inv_q(double x) const noexcept;

  /// ||v||_p of a vector of nonnegative magnitudes.
  double norm(std::span<const double> magnitudes) const noexcept;

  /// "inf" or the shortest decimal that round-trips p.
  std::string to_string() const;

 private:
  double p_;
};

}  // namespace simulroots

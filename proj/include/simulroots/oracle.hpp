#pragma once

// Ground truth for desk-scale verification. Everything here runs in software
// floating point (MPFR through Boost.Multiprecision) and is independent of
// the double-precision kernel in simul.hpp.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "simulroots/norm.hpp"
#include "simulroots/poly.hpp"
#include "simulroots/simul.hpp"

namespace simulroots {

using XReal = boost::multiprecision::mpfr_float;

struct XComplex {
  XReal re{0};
  XReal im{0};

  XComplex() = default;
  XComplex(XReal r, XReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit XComplex(Complex z) : re(z.real()), im(z.imag()) {}

  Complex to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  friend XComplex operator+(const XComplex& x, const XComplex& y) { return {x.re + y.re, x.im + y.im}; }
  friend XComplex operator-(const XComplex& x, const XComplex& y) { return {x.re - y.re, x.im - y.im}; }
  friend XComplex operator*(const XComplex& x, const XComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend XComplex operator/(const XComplex& x, const XComplex& y) {
    const XReal den = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den};
  }
  XComplex& operator+=(const XComplex& y) { return *this = *this + y; }
  XComplex& operator-=(const XComplex& y) { return *this = *this - y; }
  XComplex& operator*=(const XComplex& y) { return *this = *this * y; }
};

XReal abs(const XComplex& z);

/// Working precision for the oracle: SIMULROOTS_PRECISION_BITS when set
/// (clamped to >= 128), else 256.
int oracle_precision_bits();

/// Sets the MPFR default precision for its lifetime and restores the
/// previous one on exit. Not thread safe: the default is process-wide.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_digits10_;
};

using XVector = std::vector<XComplex>;

/// Extended-precision copy of a monic polynomial; double coefficients convert
/// exactly.
class XPolynomial {
 public:
  explicit XPolynomial(const MonicPolynomial& f);
  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  XComplex eval(const XComplex& x) const;
  XComplex eval_derivative(const XComplex& x) const;
  /// sum_k |c_k| |x|^k including the leading 1; the scale for relative residuals.
  XReal magnitude(const XComplex& x) const;
  const std::vector<XComplex>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<XComplex> coeffs_;
};

struct ReferenceRoots {
  std::vector<Complex> roots;  // rounded to double
  XVector exact;               // at precision_bits
  std::vector<double> residuals;  // |f(xi_i)| / sum_k |c_k| |xi_i|^k
  int precision_bits = 0;
  int iterations = 0;
  int restarts = 0;
};

struct OracleOptions {
  int precision_bits = 0;      // 0: oracle_precision_bits()
  double rotation = 0.4142135623730951;  // angle offset of the initial circle
  int max_iterations = 2000;   // per attempt
  int max_restarts = 6;
  std::uint64_t seed = 20240617;
};

/// All n roots by extended-precision Weierstrass iteration started on the
/// circle of radius 1 + max|c_i|. Throws Error(oracle_failure) if the
/// relative residual target (1e-30) is missed after all restarts, or if two
/// roots are closer than 1e-6.
ReferenceRoots reference_roots(const MonicPolynomial& f, const OracleOptions& options = {});

struct Matching {
  std::vector<std::size_t> assignment;  // component i -> root assignment[i]
  double cost = 0.0;                    // sum of |z_i - xi_assignment[i]|
  std::optional<double> runner_up;      // cost of the best different assignment
};

/// Minimal-total-distance perfect matching of components to roots: exact for
/// n <= 12 (subset DP), greedy plus pairwise-swap improvement beyond.
/// Throws Error(matching_ambiguous) when the runner-up cost is within 1e-15
/// relative of the optimum.
Matching match_to_roots(std::span<const Complex> z, std::span<const Complex> roots);

/// ||z^k - xi||_p for each iterate, with xi ordered by the matching of the
/// last iterate and distances taken at the oracle precision.
std::vector<double> true_errors(std::span<const ApproximationVector> iterates,
                                const ReferenceRoots& roots, const NormParameter& norm);

/// As above for extended-precision iterates.
std::vector<double> true_errors(std::span<const XVector> iterates, const ReferenceRoots& roots,
                                const NormParameter& norm);

struct OrderEstimate {
  std::vector<double> ratios;  // ln(e_{k+1}/e_k) / ln(e_k/e_{k-1}) above the floor
  std::vector<int> at;         // the k of each ratio
  double plateau = 0.0;        // median of the last (up to) three ratios
};

/// Throws Error(insufficient_data) when no ratio can be formed from errors
/// above 100 * floor.
OrderEstimate empirical_order(std::span<const double> errors, double floor = 1e-13);

/// Natural logs of the true errors of extended-precision iterates; usable
/// when the errors fall below the double range. -inf for an exact hit.
std::vector<double> true_log_errors(std::span<const XVector> iterates, const ReferenceRoots& roots,
                                    const NormParameter& norm);

/// empirical_order on ln(e_k), with the floor also given as a log.
OrderEstimate empirical_order_log(std::span<const double> log_errors, double log_floor);

/// A trace of one method run entirely at extended precision.
struct XTrace {
  std::vector<XVector> iterates;  // z^0 .. z^K
  std::vector<double> E;          // E(z^k) at the given norm
  std::vector<double> w_norm;     // ||W(z^k)||_p
  int precision_bits = 0;
};

struct XTraceOptions {
  int precision_bits = 512;
  int max_steps = 40;
  NormParameter norm = NormParameter::infinity();
};

/// Runs `method` from z0 at extended precision until max|W| reaches the
/// working-precision floor or max_steps. Throws Error(oracle_failure) on a
/// vanishing denominator.
XTrace extended_trace(Method method, const MonicPolynomial& f, const ApproximationVector& z0,
                      const XTraceOptions& options = {});

/// One extended-precision step, rounded back to double.
ApproximationVector extended_step(Method method, const MonicPolynomial& f,
                                  const ApproximationVector& z, int precision_bits = 256);

}  // namespace simulroots

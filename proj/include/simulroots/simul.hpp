#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simulroots/norm.hpp"
#include "simulroots/poly.hpp"

namespace simulroots {

/// A point z in C^n, the iterate of every simultaneous method. Coincident
/// components are representable (separations() reports them); operations
/// that divide by differences reject them with DistinctnessViolation.
class ApproximationVector {
 public:
  ApproximationVector() = default;
  explicit ApproximationVector(std::vector<Complex> points) : points_(std::move(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Complex> points() const noexcept { return points_; }
  Complex operator[](std::size_t i) const noexcept { return points_[i]; }
  const std::vector<Complex>& vector() const noexcept { return points_; }

  friend bool operator==(const ApproximationVector&, const ApproximationVector&) = default;

 private:
  std::vector<Complex> points_;
};

enum class Method { weierstrass, ehrlich, ehrlich_derivative, nourein };

std::string to_string(Method m);
/// "weierstrass", "ehrlich", "ehrlich-derivative", "nourein".
Method parse_method(std::string_view name);

/// Smallest pairwise distance accepted as distinct: 4 ulps of the largest
/// component modulus, floored at 1e-30.
double distinctness_tolerance(const ApproximationVector& z) noexcept;

/// |denominator| below this raises SingularDenominator.
inline constexpr double kDenominatorTolerance = 1e-30;

/// Throws DistinctnessViolation naming the closest offending pair.
void require_distinct(const ApproximationVector& z);

struct Separations {
  std::vector<double> d;  // d_i = min_{j != i} |z_i - z_j|
  double delta = 0.0;     // min_i d_i
};

struct StepQuantities {
  std::vector<Complex> W;
  std::vector<double> d;
  double delta = 0.0;
  double E = 0.0;       // ||W/d||_p
  double w_norm = 0.0;  // ||W||_p
};

std::vector<Complex> weierstrass_corrections(const MonicPolynomial& f, const ApproximationVector& z);

Separations separations(const ApproximationVector& z);

/// E(z) = || (|W_1|/d_1, ..., |W_n|/d_n) ||_p.
double quality_E(const MonicPolynomial& f, const ApproximationVector& z, const NormParameter& norm);

/// W, d, delta, E and ||W||_p in one pass.
StepQuantities step_quantities(const MonicPolynomial& f, const ApproximationVector& z,
                               const NormParameter& norm);

/// Result of one total step. `post_step_collision` is set, and the iterate
/// still returned, when the new components are no longer distinct.
struct StepOutcome {
  ApproximationVector z;
  bool post_step_collision = false;
};

StepOutcome step_weierstrass(const MonicPolynomial& f, const ApproximationVector& z);

/// Ehrlich's map written with f'(z_i).
StepOutcome step_ehrlich_derivative_form(const MonicPolynomial& f, const ApproximationVector& z);

/// Ehrlich's map in Börsch-Supan form, using only Weierstrass corrections.
StepOutcome step_ehrlich_bs_form(const MonicPolynomial& f, const ApproximationVector& z);

StepOutcome step_nourein(const MonicPolynomial& f, const ApproximationVector& z);

/// Dispatches on method; Method::ehrlich is the Börsch-Supan form.
StepOutcome step(Method method, const MonicPolynomial& f, const ApproximationVector& z);

}  // namespace simulroots

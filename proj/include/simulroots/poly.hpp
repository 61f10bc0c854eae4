#pragma once

#include <complex>
#include <span>
#include <vector>

namespace simulroots {

using Complex = std::complex<double>;

/// Monic complex polynomial x^n + c_{n-1} x^{n-1} + ... + c_0.
///
/// Coefficients are stored low-to-high; the leading 1 is implicit and never
/// stored. Immutable after construction.
class MonicPolynomial {
 public:
  /// Throws DomainError unless coeffs.size() >= 2.
  explicit MonicPolynomial(std::vector<Complex> coeffs);

  /// Normalizes a general polynomial given low-to-high with a nonzero
  /// leading coefficient.
  static MonicPolynomial from_general(std::span<const Complex> coeffs_low_to_high);

  /// Expands prod (x - r_i).
  static MonicPolynomial from_roots(std::span<const Complex> roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// max |c_i| over the stored (non-leading) coefficients.
  double max_coefficient_modulus() const noexcept;

 private:
  std::vector<Complex> coeffs_;
};

/// A list of n roots, ordered to match an approximation vector.
struct RootVector {
  std::vector<Complex> roots;
};

/// f(x) by Horner's scheme.
Complex eval(const MonicPolynomial& f, Complex x) noexcept;

/// f(x) by compensated Horner: the rounding error of every product and sum
/// is recovered exactly (fma-based) and accumulated in a second pass, so the
/// result is as accurate as plain Horner carried out in twice the working
/// precision. Used where W feeds an error bound.
Complex eval_compensated(const MonicPolynomial& f, Complex x) noexcept;

/// f'(x) by Horner's scheme on the derivative coefficients.
Complex eval_derivative(const MonicPolynomial& f, Complex x) noexcept;

}  // namespace simulroots

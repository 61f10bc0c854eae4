#include "simulroots/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simulroots/errors.hpp"

namespace simulroots {

MonicPolynomial::MonicPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw domain_error("monic polynomial needs degree >= 2, got " + std::to_string(coeffs_.size()));
  }
}

MonicPolynomial MonicPolynomial::from_general(std::span<const Complex> coeffs) {
  if (coeffs.empty() || coeffs.back() == Complex{}) {
    throw domain_error("leading coefficient must be nonzero");
  }
  const Complex lead = coeffs.back();
  std::vector<Complex> monic(coeffs.begin(), coeffs.end() - 1);
  for (auto& c : monic) c /= lead;
  return MonicPolynomial(std::move(monic));
}

MonicPolynomial MonicPolynomial::from_roots(std::span<const Complex> roots) {
  // Running product, including the leading coefficient at the back.
  std::vector<Complex> p{Complex{1.0}};
  for (const Complex r : roots) {
    std::vector<Complex> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  p.pop_back();
  return MonicPolynomial(std::move(p));
}

double MonicPolynomial::max_coefficient_modulus() const noexcept {
  double m = 0.0;
  for (const Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex eval(const MonicPolynomial& f, Complex x) noexcept {
  const auto c = f.coefficients();
  Complex acc{1.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// a + b = s + e exactly.
void two_sum(double a, double b, double& s, double& e) noexcept {
  s = a + b;
  const double z = s - a;
  e = (a - (s - z)) + (b - z);
}

// a * b = p + e exactly.
void two_prod(double a, double b, double& p, double& e) noexcept {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace

Complex eval_compensated(const MonicPolynomial& f, Complex x) noexcept {
  const auto c = f.coefficients();
  const double xr = x.real(), xi = x.imag();
  double sr = 1.0, si = 0.0;  // running Horner value
  double rr = 0.0, ri = 0.0;  // running error term
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    double p1, h1, p2, h2, p3, h3, p4, h4, pr, h5, pi, h6;
    two_prod(sr, xr, p1, h1);
    two_prod(si, xi, p2, h2);
    two_prod(sr, xi, p3, h3);
    two_prod(si, xr, p4, h4);
    two_sum(p1, -p2, pr, h5);
    two_sum(p3, p4, pi, h6);
    double s7, h7, s8, h8;
    two_sum(pr, it->real(), s7, h7);
    two_sum(pi, it->imag(), s8, h8);
    const double er = (h1 - h2 + h5) + h7, ei = (h3 + h4 + h6) + h8;
    const double nr = rr * xr - ri * xi + er;
    ri = rr * xi + ri * xr + ei;
    rr = nr;
    sr = s7;
    si = s8;
  }
  return {sr + rr, si + ri};
}

Complex eval_derivative(const MonicPolynomial& f, Complex x) noexcept {
  const auto c = f.coefficients();
  const int n = f.degree();
  Complex acc{static_cast<double>(n)};
  for (int k = n - 1; k >= 1; --k) acc = acc * x + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace simulroots

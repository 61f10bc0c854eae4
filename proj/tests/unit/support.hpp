#pragma once

// Test-only oracles. Every routine here is a direct transcription of a
// formula in long double, written without reference to the library code so
// that agreement between the two is evidence rather than tautology.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "simulroots/poly.hpp"
#include "simulroots/simul.hpp"

namespace oracle {

using LC = std::complex<long double>;
using simulroots::Complex;

inline LC L(Complex z) { return {z.real(), z.imag()}; }
inline Complex D(LC z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

/// Sum of c_k x^k term by term, powers by repeated multiplication.
inline LC eval_terms(const simulroots::MonicPolynomial& f, LC x) {
  const auto c = f.coefficients();
  LC sum = 0, xp = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum += L(c[k]) * xp;
    xp *= x;
  }
  return sum + xp;
}

inline LC eval_deriv_terms(const simulroots::MonicPolynomial& f, LC x) {
  const auto c = f.coefficients();
  const auto n = c.size();
  LC sum = 0, xp = 1;
  for (std::size_t k = 1; k < n; ++k) {
    sum += static_cast<long double>(k) * L(c[k]) * xp;
    xp *= x;
  }
  return sum + static_cast<long double>(n) * xp;
}

inline std::vector<LC> W(const simulroots::MonicPolynomial& f, const std::vector<Complex>& z) {
  std::vector<LC> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    LC prod = 1;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) prod *= L(z[i]) - L(z[j]);
    }
    w[i] = eval_terms(f, L(z[i])) / prod;
  }
  return w;
}

inline std::vector<Complex> weierstrass(const simulroots::MonicPolynomial& f,
                                        const std::vector<Complex>& z) {
  const auto w = W(f, z);
  std::vector<Complex> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = D(L(z[i]) - w[i]);
  return out;
}

inline std::vector<Complex> ehrlich(const simulroots::MonicPolynomial& f,
                                    const std::vector<Complex>& z) {
  std::vector<Complex> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const LC zi = L(z[i]);
    LC s = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) s += LC(1) / (zi - L(z[j]));
    }
    const LC fz = eval_terms(f, zi), dz = eval_deriv_terms(f, zi);
    out[i] = D(zi - fz / (dz - fz * s));
  }
  return out;
}

inline std::vector<Complex> nourein(const simulroots::MonicPolynomial& f,
                                    const std::vector<Complex>& z) {
  const auto w = W(f, z);
  std::vector<Complex> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    LC s = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) s += w[j] / (L(z[i]) - L(z[j]) - w[i]);
    }
    out[i] = D(L(z[i]) - w[i] / (LC(1) + s));
  }
  return out;
}

/// max_i |a_i - b_i| / max(1, |b_i|).
inline double max_rel_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  }
  return m;
}

/// Random roots in the square [-2, 2]^2 with pairwise separation >= sep.
inline std::vector<Complex> random_roots(std::mt19937_64& rng, int n, double sep = 0.3) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> r;
  while (static_cast<int>(r.size()) < n) {
    const Complex c(u(rng), u(rng));
    bool ok = true;
    for (const Complex s : r) ok = ok && std::abs(c - s) >= sep;
    if (ok) r.push_back(c);
  }
  return r;
}

/// Each root moved by at most frac times its nearest-neighbour distance.
inline std::vector<Complex> perturbed(std::mt19937_64& rng, const std::vector<Complex>& roots,
                                      double frac) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> z(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double d = INFINITY;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) d = std::min(d, std::abs(roots[i] - roots[j]));
    }
    z[i] = roots[i] + std::polar(frac * d * u(rng), 6.283185307179586 * u(rng));
  }
  return z;
}

}  // namespace oracle

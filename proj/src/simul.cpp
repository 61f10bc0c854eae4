#include "simulroots/simul.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simulroots/errors.hpp"

namespace simulroots {

std::string to_string(Method m) {
  switch (m) {
    case Method::weierstrass: return "weierstrass";
    case Method::ehrlich: return "ehrlich";
    case Method::ehrlich_derivative: return "ehrlich-derivative";
    case Method::nourein: return "nourein";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "weierstrass") return Method::weierstrass;
  if (name == "ehrlich") return Method::ehrlich;
  if (name == "ehrlich-derivative") return Method::ehrlich_derivative;
  if (name == "nourein") return Method::nourein;
  throw Error(ErrorKind::parse_error, "unknown method '" + std::string(name) + "'");
}

double distinctness_tolerance(const ApproximationVector& z) noexcept {
  double scale = 0.0;
  for (const Complex p : z.points()) scale = std::max(scale, std::abs(p));
  return std::max(1e-30, 4.0 * std::numeric_limits<double>::epsilon() * scale);
}

namespace {

bool find_collision(const ApproximationVector& z, std::size_t& ci, std::size_t& cj, double& dist) {
  const double tol = distinctness_tolerance(z);
  const std::size_t n = z.size();
  bool found = false;
  dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = std::abs(z[i] - z[j]);
      if (!(r > tol) && r < dist) {
        ci = i;
        cj = j;
        dist = r;
        found = true;
      }
    }
  }
  return found;
}

StepOutcome finish(std::vector<Complex> next) {
  StepOutcome out{ApproximationVector(std::move(next)), false};
  std::size_t i = 0, j = 0;
  double dist = 0.0;
  out.post_step_collision = find_collision(out.z, i, j, dist);
  return out;
}

Complex checked_quotient(Complex num, Complex den, std::size_t i) {
  if (!(std::abs(den) > kDenominatorTolerance)) throw SingularDenominator(i);
  return num / den;
}

}  // namespace

void require_distinct(const ApproximationVector& z) {
  std::size_t i = 0, j = 0;
  double dist = 0.0;
  if (find_collision(z, i, j, dist)) throw DistinctnessViolation(i, j, dist);
}

std::vector<Complex> weierstrass_corrections(const MonicPolynomial& f, const ApproximationVector& z) {
  require_distinct(z);
  const std::size_t n = z.size();
  std::vector<Complex> W(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex prod{1.0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) prod *= z[i] - z[j];
    }
    W[i] = eval_compensated(f, z[i]) / prod;
  }
  return W;
}

Separations separations(const ApproximationVector& z) {
  const std::size_t n = z.size();
  Separations s;
  s.d.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) s.d[i] = std::min(s.d[i], std::abs(z[i] - z[j]));
    }
  }
  s.delta = n == 0 ? 0.0 : *std::min_element(s.d.begin(), s.d.end());
  return s;
}

StepQuantities step_quantities(const MonicPolynomial& f, const ApproximationVector& z,
                               const NormParameter& norm) {
  StepQuantities q;
  q.W = weierstrass_corrections(f, z);
  auto sep = separations(z);
  q.d = std::move(sep.d);
  q.delta = sep.delta;
  const std::size_t n = z.size();
  std::vector<double> ratio(n), mag(n);
  for (std::size_t i = 0; i < n; ++i) {
    mag[i] = std::abs(q.W[i]);
    ratio[i] = mag[i] / q.d[i];
  }
  q.E = norm.norm(ratio);
  q.w_norm = norm.norm(mag);
  return q;
}

double quality_E(const MonicPolynomial& f, const ApproximationVector& z, const NormParameter& norm) {
  return step_quantities(f, z, norm).E;
}

StepOutcome step_weierstrass(const MonicPolynomial& f, const ApproximationVector& z) {
  const auto W = weierstrass_corrections(f, z);
  std::vector<Complex> next(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) next[i] = z[i] - W[i];
  return finish(std::move(next));
}

StepOutcome step_ehrlich_derivative_form(const MonicPolynomial& f, const ApproximationVector& z) {
  require_distinct(z);
  const std::size_t n = z.size();
  std::vector<Complex> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex fi = eval(f, z[i]);
    if (fi == Complex{}) {
      next[i] = z[i];
      continue;
    }
    Complex sum{};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum += 1.0 / (z[i] - z[j]);
    }
    next[i] = z[i] - checked_quotient(fi, eval_derivative(f, z[i]) - fi * sum, i);
  }
  return finish(std::move(next));
}

StepOutcome step_ehrlich_bs_form(const MonicPolynomial& f, const ApproximationVector& z) {
  const auto W = weierstrass_corrections(f, z);
  const std::size_t n = z.size();
  std::vector<Complex> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (W[i] == Complex{}) {
      next[i] = z[i];
      continue;
    }
    Complex den{1.0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) den += W[j] / (z[i] - z[j]);
    }
    next[i] = z[i] - checked_quotient(W[i], den, i);
  }
  return finish(std::move(next));
}

StepOutcome step_nourein(const MonicPolynomial& f, const ApproximationVector& z) {
  const auto W = weierstrass_corrections(f, z);
  const double tol = distinctness_tolerance(z);
  const std::size_t n = z.size();
  std::vector<Complex> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (W[i] == Complex{}) {
      next[i] = z[i];
      continue;
    }
    Complex den{1.0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex shifted = z[i] - z[j] - W[i];
      if (!(std::abs(shifted) > tol)) throw ShiftedCollision(i, j);
      den += W[j] / shifted;
    }
    next[i] = z[i] - checked_quotient(W[i], den, i);
  }
  return finish(std::move(next));
}

StepOutcome step(Method method, const MonicPolynomial& f, const ApproximationVector& z) {
  switch (method) {
    case Method::weierstrass: return step_weierstrass(f, z);
    case Method::ehrlich: return step_ehrlich_bs_form(f, z);
    case Method::ehrlich_derivative: return step_ehrlich_derivative_form(f, z);
    case Method::nourein: return step_nourein(f, z);
  }
  return step_ehrlich_bs_form(f, z);
}

}  // namespace simulroots

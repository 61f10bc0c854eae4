#include "simulroots/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "simulroots/errors.hpp"

namespace simulroots {

namespace {

Error oracle_failure(const std::string& what) { return Error(ErrorKind::oracle_failure, what); }

unsigned digits10_for_bits(int bits) {
  return static_cast<unsigned>(std::ceil(bits * std::log10(2.0))) + 2;
}

XReal pow2(int e) {
  XReal r(1);
  return boost::multiprecision::ldexp(r, e);
}

XVector to_x(std::span<const Complex> z) {
  XVector out;
  out.reserve(z.size());
  for (const Complex c : z) out.emplace_back(c);
  return out;
}

// Weierstrass corrections at extended precision; nullopt if two components
// coincide exactly.
std::optional<XVector> x_corrections(const XPolynomial& f, const XVector& z) {
  const std::size_t n = z.size();
  XVector W(n);
  for (std::size_t i = 0; i < n; ++i) {
    XComplex prod(XReal(1), XReal(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) prod *= z[i] - z[j];
    }
    if (prod.re == 0 && prod.im == 0) return std::nullopt;
    W[i] = f.eval(z[i]) / prod;
  }
  return W;
}

bool is_zero(const XComplex& z) { return z.re == 0 && z.im == 0; }

XVector x_step(Method method, const XPolynomial& f, const XVector& z, const XVector& W) {
  const std::size_t n = z.size();
  XVector next(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (method == Method::weierstrass) {
      next[i] = z[i] - W[i];
      continue;
    }
    if (is_zero(W[i])) {
      next[i] = z[i];
      continue;
    }
    if (method == Method::ehrlich_derivative) {
      const XComplex fi = f.eval(z[i]);
      XComplex sum;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += XComplex(XReal(1), XReal(0)) / (z[i] - z[j]);
      }
      const XComplex den = f.eval_derivative(z[i]) - fi * sum;
      if (is_zero(den)) throw oracle_failure("vanishing Ehrlich denominator");
      next[i] = z[i] - fi / den;
      continue;
    }
    XComplex den(XReal(1), XReal(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      XComplex diff = z[i] - z[j];
      if (method == Method::nourein) diff -= W[i];
      if (is_zero(diff)) throw oracle_failure("vanishing difference in extended step");
      den += W[j] / diff;
    }
    if (is_zero(den)) throw oracle_failure("vanishing denominator in extended step");
    next[i] = z[i] - W[i] / den;
  }
  return next;
}

XReal max_abs(const XVector& v) {
  XReal m(0);
  for (const auto& c : v) m = std::max(m, abs(c));
  return m;
}

// Subset DP over roots; `forbidden` (component, root) is excluded when set.
double dp_matching(const std::vector<std::vector<double>>& cost, std::vector<std::size_t>* assign,
                   std::optional<std::pair<std::size_t, std::size_t>> forbidden) {
  const std::size_t n = cost.size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full + 1, inf);
  std::vector<int> choice(full + 1, -1);
  dp[0] = 0.0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (dp[mask] == inf) continue;
    const auto i = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (forbidden && forbidden->first == i && forbidden->second == j) continue;
      const std::size_t next = mask | (std::size_t{1} << j);
      const double c = dp[mask] + cost[i][j];
      if (c < dp[next]) {
        dp[next] = c;
        choice[next] = static_cast<int>(j);
      }
    }
  }
  if (assign) {
    assign->assign(n, 0);
    std::size_t mask = full;
    for (std::size_t i = n; i-- > 0;) {
      const auto j = static_cast<std::size_t>(choice[mask]);
      (*assign)[i] = j;
      mask &= ~(std::size_t{1} << j);
    }
  }
  return dp[full];
}

std::vector<double> errors_against(std::span<const XVector> iterates, const ReferenceRoots& roots,
                                   const NormParameter& norm) {
  if (iterates.empty()) return {};
  PrecisionScope scope(roots.precision_bits);
  std::vector<Complex> last(iterates.back().size());
  for (std::size_t i = 0; i < last.size(); ++i) last[i] = iterates.back()[i].to_complex();
  const auto match = match_to_roots(last, roots.roots);
  std::vector<double> out;
  out.reserve(iterates.size());
  std::vector<double> dist(last.size());
  for (const auto& z : iterates) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      dist[i] = abs(z[i] - roots.exact[match.assignment[i]]).convert_to<double>();
    }
    out.push_back(norm.norm(dist));
  }
  return out;
}

// Natural logs of the errors, so that errors below the double range keep
// their exponent.
std::vector<double> log_errors_against(std::span<const XVector> iterates,
                                       const ReferenceRoots& roots, const NormParameter& norm) {
  if (iterates.empty()) return {};
  PrecisionScope scope(roots.precision_bits);
  std::vector<Complex> last(iterates.back().size());
  for (std::size_t i = 0; i < last.size(); ++i) last[i] = iterates.back()[i].to_complex();
  const auto match = match_to_roots(last, roots.roots);
  std::vector<double> out;
  out.reserve(iterates.size());
  std::vector<XReal> dist(last.size());
  std::vector<double> scaled(last.size());
  for (const auto& z : iterates) {
    XReal top = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      dist[i] = abs(z[i] - roots.exact[match.assignment[i]]);
      if (dist[i] > top) top = dist[i];
    }
    if (top == 0) {
      out.push_back(-std::numeric_limits<double>::infinity());
      continue;
    }
    for (std::size_t i = 0; i < z.size(); ++i) scaled[i] = XReal(dist[i] / top).convert_to<double>();
    out.push_back(XReal(log(top)).convert_to<double>() + std::log(norm.norm(scaled)));
  }
  return out;
}

}  // namespace

XReal abs(const XComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

int oracle_precision_bits() {
  if (const char* env = std::getenv("SIMULROOTS_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<int>(std::max(128L, v));
  }
  return 256;
}

PrecisionScope::PrecisionScope(int bits) : previous_digits10_(XReal::default_precision()) {
  XReal::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { XReal::default_precision(previous_digits10_); }

XPolynomial::XPolynomial(const MonicPolynomial& f) {
  for (const Complex c : f.coefficients()) coeffs_.emplace_back(c);
}

XComplex XPolynomial::eval(const XComplex& x) const {
  XComplex acc(XReal(1), XReal(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

XComplex XPolynomial::eval_derivative(const XComplex& x) const {
  const int n = degree();
  XComplex acc(XReal(n), XReal(0));
  for (int k = n - 1; k >= 1; --k) {
    acc = acc * x + XComplex(XReal(k), XReal(0)) * coeffs_[static_cast<std::size_t>(k)];
  }
  return acc;
}

XReal XPolynomial::magnitude(const XComplex& x) const {
  const XReal r = abs(x);
  XReal acc(1);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + abs(*it);
  return acc;
}

ReferenceRoots reference_roots(const MonicPolynomial& f, const OracleOptions& options) {
  const int bits = options.precision_bits > 0 ? options.precision_bits : oracle_precision_bits();
  PrecisionScope scope(bits);
  const XPolynomial xf(f);
  const int n = f.degree();
  const double radius0 = 1.0 + f.max_coefficient_modulus();
  const XReal tol = pow2(-(bits - 16));
  const XReal residual_target("1e-30");

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ReferenceRoots out;
  out.precision_bits = bits;
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    const double angle0 = attempt == 0 ? options.rotation : 2.0 * std::numbers::pi * unit(rng);
    const double radius = attempt == 0 ? radius0 : radius0 * (1.0 + 0.5 * unit(rng));
    XVector z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * k / n + angle0;
      z[static_cast<std::size_t>(k)] = XComplex(Complex(radius * std::cos(t), radius * std::sin(t)));
    }
    int polish = -1;
    bool stalled = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      ++out.iterations;
      const auto W = x_corrections(xf, z);
      if (!W) {
        stalled = true;
        break;
      }
      for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] -= (*W)[static_cast<std::size_t>(i)];
      if (polish >= 0) {
        if (++polish == 2) break;
        continue;
      }
      if (max_abs(*W) <= tol * (1 + max_abs(z))) polish = 0;
    }
    if (stalled || polish < 0) {
      ++out.restarts;
      continue;
    }
    out.residuals.clear();
    bool ok = true;
    for (const auto& xi : z) {
      const XReal rel = abs(xf.eval(xi)) / xf.magnitude(xi);
      out.residuals.push_back(rel.convert_to<double>());
      if (!(rel <= residual_target)) ok = false;
    }
    if (!ok) {
      ++out.restarts;
      continue;
    }
    out.exact = std::move(z);
    out.roots.clear();
    for (const auto& xi : out.exact) out.roots.push_back(xi.to_complex());
    for (std::size_t i = 0; i < out.exact.size(); ++i) {
      for (std::size_t j = i + 1; j < out.exact.size(); ++j) {
        if (!(abs(out.exact[i] - out.exact[j]) > XReal("1e-6"))) {
          throw oracle_failure("roots closer than 1e-6; the oracle needs simple, separated zeros");
        }
      }
    }
    return out;
  }
  throw oracle_failure("Weierstrass iteration missed the residual target after " +
                       std::to_string(options.max_restarts) + " restarts");
}

Matching match_to_roots(std::span<const Complex> z, std::span<const Complex> roots) {
  const std::size_t n = z.size();
  if (roots.size() != n) throw Error(ErrorKind::matching_ambiguous, "size mismatch");
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(z[i] - roots[j]);
  }
  Matching m;
  if (n <= 12) {
    m.cost = dp_matching(cost, &m.assignment, std::nullopt);
    double runner = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      runner = std::min(runner, dp_matching(cost, nullptr, std::make_pair(i, m.assignment[i])));
    }
    m.runner_up = runner;
    if (runner - m.cost <= 1e-15 * runner) {
      throw Error(ErrorKind::matching_ambiguous,
                  "two assignments within 1e-15 relative cost (" + std::to_string(m.cost) + ", " +
                      std::to_string(runner) + ")");
    }
    return m;
  }
  // Greedy by nearest pair, then pairwise swaps until no swap lowers the cost.
  std::vector<bool> used_z(n, false), used_r(n, false);
  m.assignment.assign(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_z[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!used_r[j] && cost[i][j] < best) {
          best = cost[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    used_z[bi] = used_r[bj] = true;
    m.assignment[bi] = bj;
  }
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        const double now = cost[i][m.assignment[i]] + cost[k][m.assignment[k]];
        const double swapped = cost[i][m.assignment[k]] + cost[k][m.assignment[i]];
        if (swapped < now) {
          std::swap(m.assignment[i], m.assignment[k]);
          improved = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) m.cost += cost[i][m.assignment[i]];
  return m;
}

std::vector<double> true_errors(std::span<const ApproximationVector> iterates,
                                const ReferenceRoots& roots, const NormParameter& norm) {
  PrecisionScope scope(roots.precision_bits);
  std::vector<XVector> x;
  x.reserve(iterates.size());
  for (const auto& z : iterates) x.push_back(to_x(z.points()));
  return errors_against(x, roots, norm);
}

std::vector<double> true_errors(std::span<const XVector> iterates, const ReferenceRoots& roots,
                                const NormParameter& norm) {
  return errors_against(iterates, roots, norm);
}

OrderEstimate empirical_order(std::span<const double> e, double floor) {
  std::vector<double> logs(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) logs[k] = std::log(e[k]);
  return empirical_order_log(logs, std::log(floor));
}

std::vector<double> true_log_errors(std::span<const XVector> iterates, const ReferenceRoots& roots,
                                    const NormParameter& norm) {
  return log_errors_against(iterates, roots, norm);
}

OrderEstimate empirical_order_log(std::span<const double> le, double log_floor) {
  OrderEstimate est;
  const double cut = log_floor + std::log(100.0);
  for (std::size_t k = 1; k + 1 < le.size(); ++k) {
    if (!(le[k - 1] > cut && le[k] > cut && le[k + 1] > cut)) continue;
    const double den = le[k] - le[k - 1];
    if (den == 0.0) continue;
    est.ratios.push_back((le[k + 1] - le[k]) / den);
    est.at.push_back(static_cast<int>(k));
  }
  if (est.ratios.empty()) {
    throw Error(ErrorKind::insufficient_data, "fewer than three errors above the noise floor");
  }
  const std::size_t take = std::min<std::size_t>(3, est.ratios.size());
  std::vector<double> tail(est.ratios.end() - static_cast<std::ptrdiff_t>(take), est.ratios.end());
  std::sort(tail.begin(), tail.end());
  est.plateau = take % 2 == 1 ? tail[take / 2] : 0.5 * (tail[take / 2 - 1] + tail[take / 2]);
  return est;
}

XTrace extended_trace(Method method, const MonicPolynomial& f, const ApproximationVector& z0,
                      const XTraceOptions& options) {
  PrecisionScope scope(options.precision_bits);
  const XPolynomial xf(f);
  XTrace tr;
  tr.precision_bits = options.precision_bits;
  XVector z = to_x(z0.points());
  const XReal floor = pow2(-(options.precision_bits - 8));
  const std::size_t n = z.size();
  for (int k = 0;; ++k) {
    const auto W = x_corrections(xf, z);
    if (!W) throw oracle_failure("coincident components in extended trace");
    std::vector<double> ratio(n), mag(n);
    for (std::size_t i = 0; i < n; ++i) {
      XReal d = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const XReal r = abs(z[i] - z[j]);
        if (d < 0 || r < d) d = r;
      }
      const XReal w = abs((*W)[i]);
      mag[i] = w.convert_to<double>();
      ratio[i] = (w / d).convert_to<double>();
    }
    tr.iterates.push_back(z);
    tr.E.push_back(options.norm.norm(ratio));
    tr.w_norm.push_back(options.norm.norm(mag));
    if (k >= options.max_steps || max_abs(*W) <= floor * (1 + max_abs(z))) break;
    z = x_step(method, xf, z, *W);
  }
  return tr;
}

ApproximationVector extended_step(Method method, const MonicPolynomial& f,
                                  const ApproximationVector& z, int precision_bits) {
  PrecisionScope scope(precision_bits);
  const XPolynomial xf(f);
  const XVector xz = to_x(z.points());
  const auto W = x_corrections(xf, xz);
  if (!W) throw oracle_failure("coincident components");
  const XVector next = x_step(method, xf, xz, *W);
  std::vector<Complex> out;
  out.reserve(next.size());
  for (const auto& c : next) out.push_back(c.to_complex());
  return ApproximationVector(std::move(out));
}

}  // namespace simulroots

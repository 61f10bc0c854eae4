#include "simulroots/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "simulroots/errors.hpp"

namespace simulroots {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// (1 + t)^{n-1}; log-space for large n where the power approaches e^{(n-1)t}.
double power_n1(double t, int n) {
  if (n > 30) return std::exp((n - 1) * std::log1p(t));
  return std::pow(1.0 + t, n - 1);
}

void check_domain(double x, double bound, const char* name) {
  if (!(x >= 0.0 && x < bound)) {
    std::ostringstream os;
    os.precision(17);
    os << name << ": x = " << x << " outside [0, " << bound << ")";
    throw domain_error(os.str());
  }
}

Error inapplicable(const std::string& why) { return Error(ErrorKind::inapplicable, why); }

// Largest x in [0, hi) with accept(x), assuming accept is monotone.
template <class Accept>
double bisect_sup(double hi, Accept accept) {
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (accept(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MethodParams MethodParams::make(int n, const NormParameter& norm) {
  if (n < 2) throw domain_error("degree must be >= 2");
  MethodParams p;
  p.n = n;
  p.norm = norm;
  p.a = norm.pow_inv_q(static_cast<double>(n - 1));
  p.b = norm.pow_inv_q(2.0);
  p.m = p.a + p.b + 1.0;
  p.n1_pow_inv_p = norm.pow_inv_p(static_cast<double>(n - 1));
  return p;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::localization: return "localization";
    case CertificateKind::ehrlich: return "ehrlich";
    case CertificateKind::nourein: return "nourein";
  }
  return "unknown";
}

CertificateKind certificate_kind_for(Method method) {
  switch (method) {
    case Method::weierstrass: return CertificateKind::localization;
    case Method::ehrlich:
    case Method::ehrlich_derivative: return CertificateKind::ehrlich;
    case Method::nourein: return CertificateKind::nourein;
  }
  return CertificateKind::ehrlich;
}

double localization_domain_bound(const MethodParams& p) { return 1.0 / p.b; }

double ehrlich_domain_bound(const MethodParams& p) {
  return 1.0 / std::max(p.a + 1.0, p.a + p.b);
}

double nourein_domain_bound(const MethodParams& p) {
  return 2.0 / (p.m + std::sqrt(p.m * p.m - 4.0 * p.b));
}

double domain_bound(CertificateKind kind, const MethodParams& p) {
  switch (kind) {
    case CertificateKind::localization: return localization_domain_bound(p);
    case CertificateKind::ehrlich: return ehrlich_domain_bound(p);
    case CertificateKind::nourein: return nourein_domain_bound(p);
  }
  return 0.0;
}

double phi_localization(double x, const MethodParams& p) {
  check_domain(x, localization_domain_bound(p), "phi_localization");
  const double shrink = 1.0 - p.b * x;
  const double lead = p.a * x / ((1.0 - x) * shrink);
  return lead * power_n1(x / (p.n1_pow_inv_p * shrink), p.n);
}

double phi_ehrlich(double x, const MethodParams& p) {
  check_domain(x, ehrlich_domain_bound(p), "phi_ehrlich");
  const double d1 = 1.0 - (p.a + 1.0) * x;
  const double d2 = 1.0 - (p.a + p.b) * x;
  const double lead = p.a * x * x / (d1 * d2);
  return lead * power_n1(p.a * x / ((p.n - 1) * d2), p.n);
}

double phi_nourein(double x, const MethodParams& p) {
  check_domain(x, nourein_domain_bound(p), "phi_nourein");
  const double q1 = 1.0 - p.m * x + p.b * x * x;
  const double q2 = 1.0 - (p.a + 2.0) * x + x * x;
  if (!(q1 > 0.0 && q2 > 0.0)) {
    throw Error(ErrorKind::negative_denominator, "phi_nourein: quadratic factor not positive");
  }
  const double lead = p.a * p.a * x * x * x / (q1 * q2);
  return lead * power_n1(p.a * (x - x * x) / ((p.n - 1) * q1), p.n);
}

double phi(CertificateKind kind, double x, const MethodParams& p) {
  switch (kind) {
    case CertificateKind::localization: return phi_localization(x, p);
    case CertificateKind::ehrlich: return phi_ehrlich(x, p);
    case CertificateKind::nourein: return phi_nourein(x, p);
  }
  return 0.0;
}

double log_phi_ehrlich(double x, const MethodParams& p) {
  const double d1 = 1.0 - (p.a + 1.0) * x;
  const double d2 = 1.0 - (p.a + p.b) * x;
  return std::log(p.a) + 2.0 * std::log(x) - std::log(d1) - std::log(d2) +
         (p.n - 1) * std::log1p(p.a * x / ((p.n - 1) * d2));
}

double log_phi_nourein(double x, const MethodParams& p) {
  const double q1 = 1.0 - p.m * x + p.b * x * x;
  const double q2 = 1.0 - (p.a + 2.0) * x + x * x;
  return 2.0 * std::log(p.a) + 3.0 * std::log(x) - std::log(q1) - std::log(q2) +
         (p.n - 1) * std::log1p(p.a * (x - x * x) / ((p.n - 1) * q1));
}

PsiMu psi_mu_ehrlich(double x, const MethodParams& p) {
  check_domain(x, ehrlich_domain_bound(p), "psi_mu_ehrlich");
  const double inv = 1.0 - p.a * x;
  return {(1.0 - (p.a + p.b) * x) / inv, 1.0 / inv};
}

PsiMu psi_mu_nourein(double x, const MethodParams& p) {
  check_domain(x, std::min(nourein_domain_bound(p), 1.0 / (p.a + 1.0)), "psi_mu_nourein");
  const double den = 1.0 - (p.a + 1.0) * x;
  return {(1.0 - p.m * x + p.b * x * x) / den, (1.0 - x) / den};
}

PsiMu psi_mu(CertificateKind kind, double x, const MethodParams& p) {
  switch (kind) {
    case CertificateKind::localization: return {1.0 - p.b * x, 1.0};
    case CertificateKind::ehrlich: return psi_mu_ehrlich(x, p);
    case CertificateKind::nourein: return psi_mu_nourein(x, p);
  }
  return {};
}

Certificate certify_from_E(CertificateKind kind, double E0, const MethodParams& params,
                           const CertifyOptions& options) {
  Certificate c;
  c.kind = kind;
  c.params = params;
  c.E0 = E0;
  c.domain_bound = domain_bound(kind, params);
  double E = E0;
  if (options.pessimistic) {
    E = std::nextafter(E0 * (1.0 + 4.0 * kEps), std::numeric_limits<double>::infinity());
  }
  if (!(E < c.domain_bound)) return c;

  const double lambda = phi(kind, E, params);
  c.lambda = lambda;
  if (kind == CertificateKind::localization) {
    const double theta = 1.0 - params.b * E;
    c.theta = theta;
    c.satisfied = lambda < 1.0;
    c.strict = c.satisfied;
    c.degenerate = !(theta * lambda * lambda < 1.0);
    if (!c.degenerate) c.disk_ratio = theta * lambda / (1.0 - theta * lambda * lambda);
    c.guaranteed_order = c.satisfied ? 2 : 0;
    return c;
  }
  const PsiMu pm = psi_mu(kind, E, params);
  c.theta = pm.theta;
  c.mu0 = pm.mu;
  c.satisfied = lambda <= 1.0;
  c.strict = lambda < 1.0;
  if (c.strict) c.guaranteed_order = kind == CertificateKind::ehrlich ? 3 : 4;
  return c;
}

Certificate certify(CertificateKind kind, const MonicPolynomial& f, const ApproximationVector& z0,
                    const NormParameter& norm, const CertifyOptions& options) {
  const double E0 = quality_E(f, z0, norm);
  return certify_from_E(kind, E0, MethodParams::make(f.degree(), norm), options);
}

Certificate certify_localization(const MonicPolynomial& f, const ApproximationVector& z0,
                                 const NormParameter& norm, const CertifyOptions& options) {
  return certify(CertificateKind::localization, f, z0, norm, options);
}

Certificate certify_ehrlich(const MonicPolynomial& f, const ApproximationVector& z0,
                            const NormParameter& norm, const CertifyOptions& options) {
  return certify(CertificateKind::ehrlich, f, z0, norm, options);
}

Certificate certify_nourein(const MonicPolynomial& f, const ApproximationVector& z0,
                            const NormParameter& norm, const CertifyOptions& options) {
  return certify(CertificateKind::nourein, f, z0, norm, options);
}

double theorem_threshold(CertificateKind kind, const MethodParams& params) {
  return bisect_sup(domain_bound(kind, params),
                    [&](double x) { return phi(kind, x, params) <= 1.0; });
}

double threshold_corollary(CertificateKind method, Corollary corollary, int n,
                           const NormParameter& norm) {
  if (method == CertificateKind::localization) {
    throw inapplicable("no corollary thresholds for the localization theorem");
  }
  if (n < 2) throw inapplicable("degree must be >= 2");
  const bool ehrlich = method == CertificateKind::ehrlich;
  switch (corollary) {
    case Corollary::inf_condition: {
      if (!norm.is_infinite()) throw inapplicable("the (MaeC)/(NouC) conditions are for p = inf");
      const double hi = ehrlich ? 1.0 / (n + 1.0)
                                : 2.0 / (n + 2.0 + std::sqrt(n * n + 4.0 * n - 4.0));
      return bisect_sup(hi, [&](double C) { return ehrlich ? maeC_holds(n, C) : nouC_holds(n, C); });
    }
    case Corollary::lp_general: {
      if (n < 3) throw inapplicable("the (n-1)^{1/q} threshold needs n >= 3");
      return 1.0 / (2.0 * norm.pow_inv_q(n - 1.0) + 2.0);
    }
    case Corollary::inf_linear: {
      if (!norm.is_infinite()) throw inapplicable("the linear-in-n thresholds are for p = inf");
      return ehrlich ? 1.0 / (1.5 * n + 1.8) : 1.0 / (1.4 * n + 2.8);
    }
    case Corollary::l1: {
      if (!norm.is_one()) throw inapplicable("the L1 thresholds are for p = 1");
      return solve_threshold_equation(ehrlich ? ThresholdEquation::ehrlich_l1
                                              : ThresholdEquation::nourein_l1);
    }
  }
  throw inapplicable("unknown corollary");
}

double remark_B_of_A(double A, const NormParameter& norm) {
  if (!(A > 1.0)) throw domain_error("remark_B_of_A needs A > 1");
  const double t = 1.0 / (A - 1.0);
  return norm.pow_inv_q(2.0) + 0.25 * t * std::exp(t);
}

double threshold_equation_upper(ThresholdEquation which) {
  return which == ThresholdEquation::ehrlich_l1 ? 0.5 : 2.0 / (3.0 + std::sqrt(5.0));
}

double log_threshold_equation_lhs(ThresholdEquation which, double x) {
  if (which == ThresholdEquation::ehrlich_l1) {
    const double u = x / (1.0 - 2.0 * x);
    return 2.0 * std::log(u) + u;
  }
  const double q = 1.0 - 3.0 * x + x * x;
  return 3.0 * std::log(x) - 2.0 * std::log(q) + (x - x * x) / q;
}

double threshold_equation_lhs(ThresholdEquation which, double x) {
  if (x == 0.0) return 0.0;
  return std::exp(log_threshold_equation_lhs(which, x));
}

double solve_threshold_equation(ThresholdEquation which) {
  const double upper = threshold_equation_upper(which);
  double lo = 1e-12 * upper;
  double hi = upper * (1.0 - 1e-12);
  if (!(log_threshold_equation_lhs(which, lo) < 0.0 && log_threshold_equation_lhs(which, hi) > 0.0)) {
    throw Error(ErrorKind::bracket_failure, "threshold equation does not change sign on its interval");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (log_threshold_equation_lhs(which, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DominanceResult dominance_majorant_check(ThresholdEquation which, int n_max, int grid) {
  DominanceResult r;
  const double upper = threshold_equation_upper(which);
  const NormParameter l1(1.0);
  for (int n = 2; n <= n_max; ++n) {
    const auto params = MethodParams::make(n, l1);
    for (int k = 1; k <= grid; ++k) {
      const double x = upper * k / (grid + 1.0);
      const double lp = which == ThresholdEquation::ehrlich_l1 ? log_phi_ehrlich(x, params)
                                                               : log_phi_nourein(x, params);
      const double lg = log_threshold_equation_lhs(which, x);
      ++r.points_checked;
      if (!(lp < lg)) {
        r.holds = false;
        r.n = n;
        r.x = x;
        r.log_phi = lp;
        r.log_g = lg;
        return r;
      }
    }
  }
  return r;
}

PhiSequence phi_sequence_monotonicity(CertificateKind method, int n_max) {
  if (method == CertificateKind::localization) {
    throw inapplicable("phi sequence is defined for Ehrlich and Nourein only");
  }
  PhiSequence s;
  const NormParameter inf = NormParameter::infinity();
  for (int n = 2; n <= n_max; ++n) {
    const auto params = MethodParams::make(n, inf);
    const double x = method == CertificateKind::ehrlich ? 1.0 / (1.5 * n + 1.8) : 1.0 / (1.4 * n + 2.8);
    s.values.push_back(phi(method, x, params));
  }
  const auto peak = std::max_element(s.values.begin(), s.values.end());
  const auto peak_idx = static_cast<std::size_t>(peak - s.values.begin());
  s.peak_n = static_cast<int>(peak_idx) + 2;
  s.peak_value = *peak;
  s.unimodal = true;
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    const bool rising = s.values[i] > s.values[i - 1];
    if (rising != (i <= peak_idx)) s.unimodal = false;
  }
  return s;
}

std::string to_string(PriorWork which) {
  switch (which) {
    case PriorWork::petkovic_herceg_41: return "petkovic-herceg-4.1";
    case PriorWork::petkovic_herceg_42: return "petkovic-herceg-4.2";
    case PriorWork::zheng_huang: return "zheng-huang";
    case PriorWork::nedic_2: return "nedic-2";
    case PriorWork::nedic_3: return "nedic-3";
  }
  return "unknown";
}

double maeC_lhs(int n, double C) {
  if (!(C >= 0.0 && C < 1.0 / (n + 1.0))) throw domain_error("(MaeC) needs 0 <= C < 1/(n+1)");
  const double r1 = 1.0 - n * C;
  const double r2 = 1.0 - (n + 1.0) * C;
  return (n - 1.0) * C * C / (r1 * r2) * std::pow(r1 / r2, n - 1);
}

bool maeC_holds(int n, double C) {
  if (!(C >= 0.0 && C < 1.0 / (n + 1.0))) return false;
  return maeC_lhs(n, C) < 1.0;
}

double nouC_lhs(int n, double C) {
  // Upper end is the smaller root of 1 - (n+2)C + 2C^2.
  const double hi = 2.0 / (n + 2.0 + std::sqrt(n * n + 4.0 * n - 4.0));
  if (!(C >= 0.0 && C < hi)) throw domain_error("(NouC) needs 0 <= C < 2/(n+2+sqrt(n^2+4n-4))");
  const double s1 = 1.0 - (n + 1.0) * C + C * C;
  const double s2 = 1.0 - (n + 2.0) * C + 2.0 * C * C;
  return (n - 1.0) * (n - 1.0) * C * C * C / (s1 * s2) * std::pow(s1 / s2, n - 1);
}

bool nouC_holds(int n, double C) {
  const double hi = 2.0 / (n + 2.0 + std::sqrt(n * n + 4.0 * n - 4.0));
  if (!(C >= 0.0 && C < hi)) return false;
  return nouC_lhs(n, C) < 1.0;
}

double petkovic_herceg_beta(int n, double C) {
  if (!(C >= 0.0 && C < 1.0 / (n + 1.0))) throw domain_error("beta needs 0 <= C < 1/(n+1)");
  const double r1 = 1.0 - n * C;
  const double r2 = 1.0 - (n + 1.0) * C;
  return (n - 1.0) * C * C * (1.0 + (n - 1.0) * C) / (r1 * (1.0 - (n - 1.0) * C)) *
         std::pow(r1 / r2, n - 1);
}

double prior_threshold(PriorWork which, int n) {
  if (n < 3) throw inapplicable("prior thresholds are stated for n >= 3");
  switch (which) {
    case PriorWork::petkovic_herceg_42:
      return n <= 4 ? 1.0 / (n + 4.5) : 1.0 / (1.545 * n + 5.0);
    case PriorWork::nedic_3:
      return n <= 23 ? 1.0 / (1.64 * n + 1.944) : 1.0 / (1.42 * n + 8.7);
    default:
      throw inapplicable(to_string(which) + " is a condition on C, not a threshold C(n)");
  }
}

bool prior_condition_holds(PriorWork which, int n, double C) {
  switch (which) {
    case PriorWork::petkovic_herceg_41: {
      if (!maeC_holds(n, C)) return false;
      if (C == 0.0) return true;
      const double beta = petkovic_herceg_beta(n, C);
      if (!(beta < 1.0)) return false;
      const double g = beta <= 0.5 ? 1.0 + 2.0 * beta : 1.0 / (1.0 - beta);
      return g < (1.0 - (n - 1.0) * C) / (2.0 * C);
    }
    case PriorWork::nedic_2: {
      if (!(C > 0.0 && C < 2.0 / (n + 4.0 + std::sqrt(n * n + 8.0 * n)))) return false;
      return nouC_lhs(n, C) < (1.0 - n * C) / (1.0 + (n - 2.0) * C);
    }
    case PriorWork::petkovic_herceg_42:
    case PriorWork::nedic_3:
      return C >= 0.0 && C <= prior_threshold(which, n);
    case PriorWork::zheng_huang:
      throw inapplicable("the Zheng-Huang conditions are cited but not stated");
  }
  return false;
}

}  // namespace simulroots

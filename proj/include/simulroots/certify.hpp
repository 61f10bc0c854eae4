#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simulroots/norm.hpp"
#include "simulroots/poly.hpp"
#include "simulroots/simul.hpp"

namespace simulroots {

/// Degree-and-norm dependent constants shared by every certificate function:
/// a = (n-1)^{1/q}, b = 2^{1/q}, m = a + b + 1, and (n-1)^{1/p} for the
/// localization function.
struct MethodParams {
  int n = 2;
  NormParameter norm = NormParameter::infinity();
  double a = 1.0;
  double b = 2.0;
  double m = 4.0;
  double n1_pow_inv_p = 1.0;

  /// Throws DomainError for n < 2.
  static MethodParams make(int n, const NormParameter& norm);
};

enum class CertificateKind { localization, ehrlich, nourein };

std::string to_string(CertificateKind kind);
/// Weierstrass maps to localization, both Ehrlich forms to ehrlich.
CertificateKind certificate_kind_for(Method method);

// Right endpoints of the open intervals on which the certificate functions
// are defined.
double localization_domain_bound(const MethodParams& params);  // 1 / 2^{1/q}
double ehrlich_domain_bound(const MethodParams& params);       // 1 / (a + b)
double nourein_domain_bound(const MethodParams& params);       // 2 / (m + sqrt(m^2 - 4b))
double domain_bound(CertificateKind kind, const MethodParams& params);

// Each phi throws DomainError (ErrorKind::domain_error) for x outside
// [0, domain_bound). phi_nourein additionally throws NegativeDenominator if a
// quadratic factor is not positive inside that interval.
double phi_localization(double x, const MethodParams& params);
double phi_ehrlich(double x, const MethodParams& params);
double phi_nourein(double x, const MethodParams& params);
double phi(CertificateKind kind, double x, const MethodParams& params);

/// ln phi, evaluated without forming phi; defined on (0, domain_bound).
double log_phi_ehrlich(double x, const MethodParams& params);
double log_phi_nourein(double x, const MethodParams& params);

struct PsiMu {
  double theta = 1.0;
  double mu = 1.0;
};

/// theta = (1 - (a+b)x)/(1 - ax), mu = 1/(1 - ax) on [0, 1/(a+b)).
PsiMu psi_mu_ehrlich(double x, const MethodParams& params);
/// theta = (1 - mx + bx^2)/(1 - (a+1)x), mu = (1 - x)/(1 - (a+1)x).
PsiMu psi_mu_nourein(double x, const MethodParams& params);
PsiMu psi_mu(CertificateKind kind, double x, const MethodParams& params);

struct Certificate {
  CertificateKind kind = CertificateKind::ehrlich;
  MethodParams params;
  double E0 = 0.0;
  double domain_bound = 0.0;
  std::optional<double> lambda;  // phi(E0); empty when E0 is outside the domain
  std::optional<double> theta;
  std::optional<double> mu0;         // not defined for localization
  std::optional<double> disk_ratio;  // localization only: theta*lambda / (1 - theta*lambda^2)
  bool satisfied = false;
  bool strict = false;
  bool degenerate = false;  // localization: theta * lambda^2 >= 1
  int guaranteed_order = 0;  // 0 when no order is certified
};

struct CertifyOptions {
  /// Bump E0 up by a few ulps before every comparison.
  bool pessimistic = false;
};

/// Pure evaluation from a precomputed E0.
Certificate certify_from_E(CertificateKind kind, double E0, const MethodParams& params,
                           const CertifyOptions& options = {});

Certificate certify_localization(const MonicPolynomial& f, const ApproximationVector& z0,
                                 const NormParameter& norm, const CertifyOptions& options = {});
Certificate certify_ehrlich(const MonicPolynomial& f, const ApproximationVector& z0,
                            const NormParameter& norm, const CertifyOptions& options = {});
Certificate certify_nourein(const MonicPolynomial& f, const ApproximationVector& z0,
                            const NormParameter& norm, const CertifyOptions& options = {});
Certificate certify(CertificateKind kind, const MonicPolynomial& f, const ApproximationVector& z0,
                    const NormParameter& norm, const CertifyOptions& options = {});

enum class Corollary {
  inf_condition,  // largest C accepted by (MaeC) / (NouC); p = inf
  lp_general,     // 1 / (2(n-1)^{1/q} + 2); n >= 3
  inf_linear,     // 1/(1.5n + 1.8) or 1/(1.4n + 2.8); p = inf
  l1,             // root of the L1 threshold equation; p = 1
};

/// Radius R such that E(z0) <= R certifies convergence under the given
/// corollary. Throws Error(ErrorKind::inapplicable) outside its hypotheses.
double threshold_corollary(CertificateKind method, Corollary corollary, int n,
                           const NormParameter& norm);

/// Largest x in the domain with phi(x) <= 1, found by bisection.
double theorem_threshold(CertificateKind kind, const MethodParams& params);

/// B = 2^{1/q} + exp(1/(A-1)) / (4(A-1)); A > 1.
double remark_B_of_A(double A, const NormParameter& norm);

enum class ThresholdEquation { ehrlich_l1, nourein_l1 };

/// Open interval on which the equation's left-hand side is defined.
double threshold_equation_upper(ThresholdEquation which);
/// Left-hand side g(x) of the equation g(x) = 1, and its logarithm.
double threshold_equation_lhs(ThresholdEquation which, double x);
double log_threshold_equation_lhs(ThresholdEquation which, double x);
/// Bisection to absolute 1e-12; throws BracketFailure if the ends do not
/// straddle 1.
double solve_threshold_equation(ThresholdEquation which);

struct DominanceResult {
  bool holds = true;
  long points_checked = 0;
  // First violation, when holds is false.
  int n = 0;
  double x = 0.0;
  double log_phi = 0.0;
  double log_g = 0.0;
};

/// Checks phi_{p=1}(x) < g(x) on `grid` interior points of the equation's
/// interval for n = 2..n_max, comparing logarithms.
DominanceResult dominance_majorant_check(ThresholdEquation which, int n_max = 200,
                                         int grid = 10000);

struct PhiSequence {
  std::vector<double> values;  // values[i] = phi_n for n = i + 2
  int peak_n = 0;
  double peak_value = 0.0;
  bool unimodal = false;  // increasing up to peak_n, decreasing after
};

/// phi_n = phi(1/(1.5n + 1.8)) (Ehrlich) or phi(1/(1.4n + 2.8)) (Nourein) at
/// p = inf, for n = 2..n_max.
PhiSequence phi_sequence_monotonicity(CertificateKind method, int n_max = 500);

enum class PriorWork { petkovic_herceg_41, petkovic_herceg_42, zheng_huang, nedic_2, nedic_3 };

std::string to_string(PriorWork which);

/// Left-hand side of (MaeC): equal to the Ehrlich phi at p = inf.
double maeC_lhs(int n, double C);
bool maeC_holds(int n, double C);
/// Left-hand side of (NouC): equal to the Nourein phi at p = inf.
double nouC_lhs(int n, double C);
bool nouC_holds(int n, double C);

/// beta of (MaePIC1).
double petkovic_herceg_beta(int n, double C);

/// Whether C satisfies the printed prior-work hypotheses on
/// ||W(z0)||_inf <= C delta(z0). For the threshold-type results (PH 4.2,
/// Nedic 3) this is C <= C(n).
bool prior_condition_holds(PriorWork which, int n, double C);

/// C(n) for the threshold-type prior results; Inapplicable for the others
/// and for n < 3.
double prior_threshold(PriorWork which, int n);

}  // namespace simulroots

#include "simulroots/bounds.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "simulroots/errors.hpp"

namespace simulroots {

namespace {

struct Exponents {
  double partial;  // (c^k - 1) / (c - 1)
  double full;     // c^k
};

// Exact integers while c^k fits in 64 bits, floating point beyond.
Exponents exponents(int base, int k) {
  const int limit = base == 3 ? 40 : 31;
  if (k <= limit) {
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(base);
    return {static_cast<double>((p - 1) / static_cast<std::uint64_t>(base - 1)),
            static_cast<double>(p)};
  }
  const double p = std::pow(static_cast<double>(base), k);
  return {(p - 1.0) / (base - 1), p};
}

// lambda^e for lambda in [0, inf), e >= 1.
double lambda_power(double lambda, double e) {
  if (lambda == 0.0) return 0.0;
  return std::exp(e * std::log(lambda));
}

}  // namespace

double apriori(CertificateKind kind, int k, double E0, double w0_norm, const MethodParams& params) {
  if (kind == CertificateKind::localization) {
    throw Error(ErrorKind::inapplicable, "no a priori bound for the Weierstrass iteration");
  }
  if (k < 1) throw domain_error("a priori bound needs k >= 1");
  const double lambda = phi(kind, E0, params);
  const double theta = psi_mu(kind, E0, params).theta;
  const auto ex = exponents(kind == CertificateKind::ehrlich ? 3 : 4, k);
  const double lam_partial = lambda_power(lambda, ex.partial);
  const double den = 1.0 - theta * lambda_power(lambda, ex.full);
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  const double A = psi_mu(kind, E0 * lam_partial, params).mu;
  return A * std::pow(theta, k) * lam_partial / den * w0_norm;
}

double apriori_ehrlich(int k, double E0, double w0_norm, const MethodParams& params) {
  return apriori(CertificateKind::ehrlich, k, E0, w0_norm, params);
}

double apriori_nourein(int k, double E0, double w0_norm, const MethodParams& params) {
  return apriori(CertificateKind::nourein, k, E0, w0_norm, params);
}

double aposteriori_bound(CertificateKind kind, double E, double w_norm, const MethodParams& params) {
  if (kind == CertificateKind::localization) {
    throw Error(ErrorKind::inapplicable, "no a posteriori bound for the Weierstrass iteration");
  }
  const double lambda = phi(kind, E, params);
  const PsiMu pm = psi_mu(kind, E, params);
  const double tl = pm.theta * lambda;
  if (!(tl < 1.0)) throw Error(ErrorKind::degenerate_bound, "theta_k * lambda_k >= 1");
  return pm.mu / (1.0 - tl) * w_norm;
}

double aposteriori(CertificateKind kind, const MonicPolynomial& f, const ApproximationVector& zk,
                   const NormParameter& norm) {
  const auto q = step_quantities(f, zk, norm);
  return aposteriori_bound(kind, q.E, q.w_norm, MethodParams::make(f.degree(), norm));
}

}  // namespace simulroots

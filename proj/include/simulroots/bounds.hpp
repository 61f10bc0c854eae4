#pragma once

#include <optional>

#include "simulroots/certify.hpp"

namespace simulroots {

/// One row of error-bound bookkeeping for iterate k.
struct BoundReport {
  int k = 0;
  std::optional<double> a_priori;  // k >= 1 only
  std::optional<double> a_posteriori;
  std::optional<double> true_error;
  std::optional<bool> a_priori_valid;
  std::optional<bool> a_posteriori_valid;
  /// Set when a bound is infinite or exceeds ||W(z^0)||-scale information.
  bool vacuous = false;
};

/// A priori bound on ||z^k - xi||_p for Ehrlich's method:
///   A_k theta^k lambda^{(3^k-1)/2} / (1 - theta lambda^{3^k}) ||W(z^0)||_p
/// with lambda = phi(E0), theta = psi(E0), A_k = mu(E0 lambda^{(3^k-1)/2}).
/// Powers of lambda are taken in log space and underflow to 0. Returns +inf
/// if the denominator is not positive. Throws DomainError if E0 is outside
/// phi's domain or k < 1.
double apriori_ehrlich(int k, double E0, double w0_norm, const MethodParams& params);

/// Same shape with base 4: mu_k theta^k lambda^{(4^k-1)/3} / (1 - theta lambda^{4^k}).
double apriori_nourein(int k, double E0, double w0_norm, const MethodParams& params);

double apriori(CertificateKind kind, int k, double E0, double w0_norm, const MethodParams& params);

/// mu(E) / (1 - psi(E) phi(E)) * ||W(z^k)||_p from precomputed E(z^k) and
/// ||W(z^k)||_p. Throws DomainError outside phi's domain and
/// Error(degenerate_bound) when psi(E) phi(E) >= 1.
double aposteriori_bound(CertificateKind kind, double E, double w_norm, const MethodParams& params);

double aposteriori(CertificateKind kind, const MonicPolynomial& f, const ApproximationVector& zk,
                   const NormParameter& norm);

}  // namespace simulroots

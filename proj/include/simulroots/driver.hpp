#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simulroots/bounds.hpp"
#include "simulroots/certify.hpp"
#include "simulroots/errors.hpp"
#include "simulroots/io.hpp"
#include "simulroots/oracle.hpp"

namespace simulroots {

enum class StopRule { aposteriori, wnorm };

std::string to_string(StopRule rule);
StopRule parse_stop_rule(std::string_view name);

struct RunConfig {
  Method method = Method::ehrlich;
  NormParameter norm = NormParameter::infinity();
  int max_iters = 100;
  StopRule stop = StopRule::aposteriori;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  bool oracle = false;
  bool pessimistic = false;

  /// Throws DomainError unless tol > 0 and max_iters >= 1.
  void validate() const;
};

struct TraceRow {
  int k = 0;
  ApproximationVector z;
  double w_norm = 0.0;
  double E = 0.0;
  std::optional<double> a_posteriori;
  std::optional<double> a_priori;
  std::optional<double> true_error;
  std::optional<double> order_ratio;
  bool post_step_collision = false;
};

enum class RunStatus { converged, budget_exhausted, error };

std::string to_string(RunStatus status);

struct IterationTrace {
  RunConfig config;
  MonicPolynomial polynomial;
  Certificate certificate;  // at z^0 for the method's theorem
  std::vector<TraceRow> rows;
  RunStatus status = RunStatus::budget_exhausted;
  std::optional<ErrorKind> error;
  std::string message;
};

/// Iterates from z0 until the stop rule holds or max_iters steps are taken.
///
/// The a posteriori bound is the stopping measure wherever the iterate's own
/// certificate holds; elsewhere (and always for Weierstrass) the measure is
/// ||W(z^k)||_p <= tol (1 + max|c_i|). Numerical failures end the run with
/// status error rather than throwing; a non-distinct z0 throws.
IterationTrace run_solve(const MonicPolynomial& f, const ApproximationVector& z0,
                         const RunConfig& config);

/// Fixed field order, floats as 17-digit decimal strings.
io::Json trace_to_json(const IterationTrace& trace);
std::string trace_to_csv(const IterationTrace& trace);

/// Deterministic complex perturbation of size up to eps * d_i(z) per component.
ApproximationVector perturb(const ApproximationVector& z, double eps, std::uint64_t seed);

/// Equally spaced points on the circle of radius 1 + max|c_i|.
ApproximationVector default_initial_point(const MonicPolynomial& f);

struct CompareRow {
  int n = 0;
  double ehrlich_linear = 0.0;     // 1/(1.5n + 1.8)
  double ehrlich_condition = 0.0;  // sup C under (MaeC)
  std::optional<double> ehrlich_lp;  // 1/(2(n-1)^{1/q} + 2), n >= 3
  std::optional<double> petkovic_herceg;
  double nourein_linear = 0.0;     // 1/(1.4n + 2.8)
  double nourein_condition = 0.0;  // sup C under (NouC)
  std::optional<double> nourein_lp;
  std::optional<double> nedic;

  /// max(linear, condition) >= prior C(n); empty when no prior value.
  std::optional<bool> ehrlich_dominates() const;
  std::optional<bool> nourein_dominates() const;
  /// The closed-form linear threshold alone against the prior value.
  std::optional<bool> ehrlich_linear_dominates() const;
  std::optional<bool> nourein_linear_dominates() const;
};

/// Throws DomainError unless 2 <= n_lo <= n_hi <= 10^4.
std::vector<CompareRow> compare_table(int n_lo, int n_hi, const NormParameter& norm);
std::string compare_to_csv(const std::vector<CompareRow>& rows);

/// The derived constants with 10 significant digits.
io::Json constants_json();

}  // namespace simulroots

#include "simulroots/driver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace simulroots {

std::string to_string(StopRule rule) {
  return rule == StopRule::aposteriori ? "aposteriori" : "wnorm";
}

StopRule parse_stop_rule(std::string_view name) {
  if (name == "aposteriori") return StopRule::aposteriori;
  if (name == "wnorm") return StopRule::wnorm;
  throw Error(ErrorKind::parse_error, "unknown stop rule '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  if (!(tol > 0.0)) throw domain_error("tolerance must be positive");
  if (max_iters < 1) throw domain_error("max_iters must be >= 1");
}

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::converged: return "converged";
    case RunStatus::budget_exhausted: return "budget-exhausted";
    case RunStatus::error: return "error";
  }
  return "unknown";
}

namespace {

// The a posteriori bound at z^k when z^k itself satisfies the method's
// certificate.
std::optional<double> in_region_bound(CertificateKind kind, double E, double w_norm,
                                      const MethodParams& params) {
  if (kind == CertificateKind::localization) return std::nullopt;
  const auto cert = certify_from_E(kind, E, params);
  if (!cert.satisfied) return std::nullopt;
  try {
    return aposteriori_bound(kind, E, w_norm, params);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

IterationTrace run_solve(const MonicPolynomial& f, const ApproximationVector& z0,
                         const RunConfig& config) {
  config.validate();
  require_distinct(z0);
  const auto kind = certificate_kind_for(config.method);
  const auto params = MethodParams::make(f.degree(), config.norm);
  const double w_scale = 1.0 + f.max_coefficient_modulus();

  IterationTrace tr{config, f, {}, {}, RunStatus::budget_exhausted, std::nullopt, {}};
  const auto q0 = step_quantities(f, z0, config.norm);
  tr.certificate = certify_from_E(kind, q0.E, params, {config.pessimistic});
  const bool priori = kind != CertificateKind::localization && tr.certificate.satisfied;

  ApproximationVector z = z0;
  bool collided = false;
  for (int k = 0;; ++k) {
    TraceRow row;
    row.k = k;
    row.z = z;
    row.post_step_collision = collided;
    try {
      const auto q = k == 0 ? q0 : step_quantities(f, z, config.norm);
      row.w_norm = q.w_norm;
      row.E = q.E;
      row.a_posteriori = in_region_bound(kind, q.E, q.w_norm, params);
      if (priori && k >= 1) row.a_priori = apriori(kind, k, q0.E, q0.w_norm, params);
    } catch (const Error& e) {
      tr.rows.push_back(std::move(row));
      tr.status = RunStatus::error;
      tr.error = e.kind();
      tr.message = e.what();
      break;
    }
    const bool use_bound = config.stop == StopRule::aposteriori && row.a_posteriori.has_value();
    const bool done = use_bound ? *row.a_posteriori <= config.tol
                                : row.w_norm <= config.tol * w_scale;
    tr.rows.push_back(row);
    if (done) {
      tr.status = RunStatus::converged;
      break;
    }
    if (k >= config.max_iters) break;
    try {
      auto out = step(config.method, f, z);
      z = std::move(out.z);
      collided = out.post_step_collision;
    } catch (const Error& e) {
      tr.status = RunStatus::error;
      tr.error = e.kind();
      tr.message = e.what();
      break;
    }
  }

  if (config.oracle) {
    const auto ref = reference_roots(f);
    std::vector<ApproximationVector> iterates;
    iterates.reserve(tr.rows.size());
    for (const auto& r : tr.rows) iterates.push_back(r.z);
    const auto errors = true_errors(iterates, ref, config.norm);
    double scale = 1.0;
    for (const Complex r : ref.roots) scale = std::max(scale, std::abs(r));
    const double cut = 100.0 * 1e-13 * scale;
    for (std::size_t k = 0; k < errors.size(); ++k) {
      tr.rows[k].true_error = errors[k];
      if (k >= 1 && k + 1 < errors.size() && errors[k - 1] > cut && errors[k] > cut &&
          errors[k + 1] > cut && errors[k] != errors[k - 1]) {
        tr.rows[k].order_ratio =
            std::log(errors[k + 1] / errors[k]) / std::log(errors[k] / errors[k - 1]);
      }
    }
  }
  return tr;
}

namespace {

io::Json opt(const std::optional<double>& v) {
  return v ? io::Json(io::format_double(*v)) : io::Json(nullptr);
}

std::string csv_opt(const std::optional<double>& v) { return v ? io::format_double(*v) : ""; }

}  // namespace

io::Json trace_to_json(const IterationTrace& tr) {
  io::Json j;
  j["method"] = to_string(tr.config.method);
  j["p"] = tr.config.norm.to_string();
  j["stop"] = to_string(tr.config.stop);
  j["tol"] = io::format_double(tr.config.tol);
  j["max_iters"] = tr.config.max_iters;
  j["polynomial"] = io::polynomial_to_json(tr.polynomial);
  j["certificate"] = io::certificate_to_json(tr.certificate);
  io::Json rows = io::Json::array();
  for (const auto& r : tr.rows) {
    io::Json row;
    row["k"] = r.k;
    row["iterate"] = io::points_to_json(r.z);
    row["w_norm"] = io::format_double(r.w_norm);
    row["E"] = io::format_double(r.E);
    row["a_posteriori"] = opt(r.a_posteriori);
    row["a_priori"] = opt(r.a_priori);
    row["true_error"] = opt(r.true_error);
    row["order_ratio"] = opt(r.order_ratio);
    row["post_step_collision"] = r.post_step_collision;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["status"] = to_string(tr.status);
  j["iterations"] = tr.rows.empty() ? 0 : tr.rows.back().k;
  j["error"] = tr.error ? io::Json(to_string(*tr.error)) : io::Json(nullptr);
  j["message"] = tr.message;
  return j;
}

std::string trace_to_csv(const IterationTrace& tr) {
  std::ostringstream os;
  os << "k,w_norm,E,a_posteriori,a_priori,true_error,order_ratio,post_step_collision";
  const std::size_t n = static_cast<std::size_t>(tr.polynomial.degree());
  for (std::size_t i = 0; i < n; ++i) os << ",re_" << i << ",im_" << i;
  os << '\n';
  for (const auto& r : tr.rows) {
    os << r.k << ',' << io::format_double(r.w_norm) << ',' << io::format_double(r.E) << ','
       << csv_opt(r.a_posteriori) << ',' << csv_opt(r.a_priori) << ',' << csv_opt(r.true_error)
       << ',' << csv_opt(r.order_ratio) << ',' << (r.post_step_collision ? 1 : 0);
    for (const Complex c : r.z.points()) {
      os << ',' << io::format_double(c.real()) << ',' << io::format_double(c.imag());
    }
    os << '\n';
  }
  return os.str();
}

ApproximationVector perturb(const ApproximationVector& z, double eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto sep = separations(z);
  std::vector<Complex> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double r = eps * sep.d[i] * unit(rng);
    const double t = 2.0 * std::numbers::pi * unit(rng);
    out[i] = z[i] + std::polar(r, t);
  }
  return ApproximationVector(std::move(out));
}

ApproximationVector default_initial_point(const MonicPolynomial& f) {
  const int n = f.degree();
  const double radius = 1.0 + f.max_coefficient_modulus();
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
  }
  return ApproximationVector(std::move(z));
}

namespace {
std::optional<bool> dominates(double ours, const std::optional<double>& prior) {
  if (!prior) return std::nullopt;
  return ours >= *prior;
}
}  // namespace

std::optional<bool> CompareRow::ehrlich_dominates() const {
  return dominates(std::max(ehrlich_linear, ehrlich_condition), petkovic_herceg);
}
std::optional<bool> CompareRow::nourein_dominates() const {
  return dominates(std::max(nourein_linear, nourein_condition), nedic);
}
std::optional<bool> CompareRow::ehrlich_linear_dominates() const {
  return dominates(ehrlich_linear, petkovic_herceg);
}
std::optional<bool> CompareRow::nourein_linear_dominates() const {
  return dominates(nourein_linear, nedic);
}

std::vector<CompareRow> compare_table(int n_lo, int n_hi, const NormParameter& norm) {
  if (!(n_lo >= 2 && n_lo <= n_hi && n_hi <= 10000)) {
    throw domain_error("n range must satisfy 2 <= lo <= hi <= 10000");
  }
  const auto inf = NormParameter::infinity();
  std::vector<CompareRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    CompareRow r;
    r.n = n;
    r.ehrlich_linear = threshold_corollary(CertificateKind::ehrlich, Corollary::inf_linear, n, inf);
    r.ehrlich_condition =
        threshold_corollary(CertificateKind::ehrlich, Corollary::inf_condition, n, inf);
    r.nourein_linear = threshold_corollary(CertificateKind::nourein, Corollary::inf_linear, n, inf);
    r.nourein_condition =
        threshold_corollary(CertificateKind::nourein, Corollary::inf_condition, n, inf);
    if (n >= 3) {
      r.ehrlich_lp = threshold_corollary(CertificateKind::ehrlich, Corollary::lp_general, n, norm);
      r.nourein_lp = threshold_corollary(CertificateKind::nourein, Corollary::lp_general, n, norm);
      r.petkovic_herceg = prior_threshold(PriorWork::petkovic_herceg_42, n);
      r.nedic = prior_threshold(PriorWork::nedic_3, n);
    }
    rows.push_back(r);
  }
  return rows;
}

std::string compare_to_csv(const std::vector<CompareRow>& rows) {
  const auto b = [](const std::optional<bool>& v) -> std::string {
    return v ? (*v ? "1" : "0") : "";
  };
  std::ostringstream os;
  os << "n,ehrlich_linear,ehrlich_condition,ehrlich_lp,petkovic_herceg_42,ehrlich_dominates,"
        "ehrlich_linear_dominates,nourein_linear,nourein_condition,nourein_lp,nedic_3,"
        "nourein_dominates,nourein_linear_dominates\n";
  for (const auto& r : rows) {
    os << r.n << ',' << io::format_double(r.ehrlich_linear) << ','
       << io::format_double(r.ehrlich_condition) << ',' << csv_opt(r.ehrlich_lp) << ','
       << csv_opt(r.petkovic_herceg) << ',' << b(r.ehrlich_dominates()) << ','
       << b(r.ehrlich_linear_dominates()) << ',' << io::format_double(r.nourein_linear) << ','
       << io::format_double(r.nourein_condition) << ',' << csv_opt(r.nourein_lp) << ','
       << csv_opt(r.nedic) << ',' << b(r.nourein_dominates()) << ','
       << b(r.nourein_linear_dominates()) << '\n';
  }
  return os.str();
}

io::Json constants_json() {
  const auto f10 = [](double x) { return io::format_double(x, 10); };
  io::Json j;
  j["EhrlichL1_R"] = f10(solve_threshold_equation(ThresholdEquation::ehrlich_l1));
  j["NoureinL1_R"] = f10(solve_threshold_equation(ThresholdEquation::nourein_l1));
  for (const auto kind : {CertificateKind::ehrlich, CertificateKind::nourein}) {
    const auto seq = phi_sequence_monotonicity(kind, 500);
    io::Json peak;
    peak["n"] = seq.peak_n;
    peak["value"] = f10(seq.peak_value);
    peak["unimodal"] = seq.unimodal;
    io::Json values = io::Json::object();
    for (int n = 2; n <= 30; ++n) {
      values[std::to_string(n)] = f10(seq.values[static_cast<std::size_t>(n - 2)]);
    }
    peak["phi_n"] = std::move(values);
    j[to_string(kind) + "_phi_peak"] = std::move(peak);
  }
  io::Json samples = io::Json::array();
  for (const char* p : {"inf", "2", "1"}) {
    const auto norm = NormParameter::parse(p);
    for (const double A : {1.5, 2.0, 3.0, 5.0, 10.0}) {
      io::Json s;
      s["A"] = f10(A);
      s["p"] = p;
      s["B"] = f10(remark_B_of_A(A, norm));
      samples.push_back(std::move(s));
    }
  }
  j["B_of_A"] = std::move(samples);
  return j;
}

}  // namespace simulroots

#include "simulroots/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "simulroots/driver.hpp"
#include "simulroots/localize.hpp"

namespace simulroots {

namespace {

struct Inputs {
  MonicPolynomial f;
  ApproximationVector z0;
};

// The polynomial file is either a bare polynomial or a corpus instance; in the
// latter case the initial point may come from the instance by name.
Inputs load_inputs(const std::string& poly_file, const std::string& point_file,
                   const std::string& point_name, bool allow_default) {
  const auto pj = io::read_json_file(poly_file);
  std::optional<io::CorpusInstance> inst;
  std::optional<MonicPolynomial> f;
  if (pj.is_object() && pj.contains("polynomial")) {
    inst = io::corpus_instance_from_json(pj);
    f = inst->polynomial;
  } else {
    f = io::polynomial_from_json(pj);
  }
  std::optional<ApproximationVector> z;
  if (!point_file.empty()) {
    z = io::points_from_json(io::read_json_file(point_file));
  } else if (inst && !point_name.empty()) {
    z = inst->point(point_name);
  } else if (inst && !inst->initial_points.empty()) {
    z = inst->initial_points.front().second;
  } else if (allow_default) {
    z = default_initial_point(*f);
  } else {
    throw Error(ErrorKind::parse_error, "no initial point given");
  }
  if (static_cast<int>(z->size()) != f->degree()) {
    throw Error(ErrorKind::parse_error, "initial point has " + std::to_string(z->size()) +
                                            " components, polynomial has degree " +
                                            std::to_string(f->degree()));
  }
  return {*f, *z};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::distinctness_violation:
    case ErrorKind::domain_error:
      return exit_usage;
    default:
      return exit_numerical;
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto to_int = [&](std::string_view v) {
    int x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
      throw Error(ErrorKind::parse_error, "bad --n-range '" + s + "'");
    }
    return x;
  };
  const auto sep = s.find_first_of(":-", 1);
  if (sep == std::string::npos) {
    const int n = to_int(s);
    return {n, n};
  }
  return {to_int(std::string_view(s).substr(0, sep)), to_int(std::string_view(s).substr(sep + 1))};
}

CertificateKind parse_kind(const std::string& name) {
  if (name == "localization") return CertificateKind::localization;
  return certificate_kind_for(parse_method(name));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simultaneous polynomial root finding with convergence certificates", "simulroots"};
  app.require_subcommand(1);

  std::string method_name = "ehrlich";
  std::string p_text = "inf";
  std::string format = "json";
  std::string poly_file, point_file, point_name;
  std::string stop_name = "aposteriori";
  double tol = 1e-12;
  int max_iters = 100;
  std::uint64_t seed = 0;
  double perturb_eps = 0.0;
  bool require_certificate = false, oracle = false, disks = false, pessimistic = false;
  std::string n_range = "3:30";
  std::string compare_format = "csv";

  const auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("polynomial", poly_file, "polynomial or corpus-instance JSON file")->required();
    sub->add_option("points", point_file, "initial point JSON file");
    sub->add_option("--point", point_name, "named initial point of a corpus instance");
    sub->add_option("--method", method_name, "weierstrass|ehrlich|ehrlich-derivative|nourein");
    sub->add_option("--p", p_text, "norm parameter, a number >= 1 or inf");
    sub->add_option("--tol", tol, "stopping tolerance");
    sub->add_option("--max-iters", max_iters, "iteration budget");
    sub->add_option("--stop", stop_name, "aposteriori|wnorm");
    sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--require-certificate", require_certificate,
                  "refuse to iterate unless the initial point is certified");
    sub->add_flag("--pessimistic", pessimistic, "round E0 upward before certifying");
    sub->add_option("--seed", seed, "seed for --perturb");
    sub->add_option("--perturb", perturb_eps, "perturb z0 by up to eps * d_i before solving");
  };

  auto* solve = app.add_subcommand("solve", "iterate to the stopping criterion and emit a trace");
  add_run_options(solve);
  solve->add_flag("--oracle", oracle, "attach true errors from the reference roots");
  auto* trace = app.add_subcommand("trace", "solve with the oracle attached");
  add_run_options(trace);

  auto* cert = app.add_subcommand("certify", "evaluate the convergence certificate at a point");
  cert->add_option("polynomial", poly_file)->required();
  cert->add_option("points", point_file);
  cert->add_option("--point", point_name);
  cert->add_option("--method", method_name,
                   "localization|weierstrass|ehrlich|ehrlich-derivative|nourein|all");
  cert->add_option("--p", p_text);
  cert->add_flag("--disks", disks, "add the inclusion disks");
  cert->add_flag("--pessimistic", pessimistic);

  auto* cmp = app.add_subcommand("compare", "per-n admissible thresholds against prior conditions");
  cmp->add_option("--n-range", n_range, "lo:hi within [2, 10000]");
  cmp->add_option("--p", p_text);
  cmp->add_option("--format", compare_format)->check(CLI::IsMember({"json", "csv"}));
  // Accepted for symmetry; the table always carries both methods.
  cmp->add_option("--method", method_name);

  app.add_subcommand("constants", "derived constants as JSON");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_usage;
  }

  try {
    const auto norm = NormParameter::parse(p_text);

    if (*solve || *trace) {
      RunConfig cfg;
      cfg.method = parse_method(method_name);
      cfg.norm = norm;
      cfg.max_iters = max_iters;
      cfg.stop = parse_stop_rule(stop_name);
      cfg.tol = tol;
      cfg.seed = seed;
      cfg.oracle = oracle || *trace;
      cfg.pessimistic = pessimistic;
      cfg.validate();
      auto in = load_inputs(poly_file, point_file, point_name, true);
      if (perturb_eps > 0.0) {
        require_distinct(in.z0);
        in.z0 = perturb(in.z0, perturb_eps, seed);
      }
      require_distinct(in.z0);
      if (require_certificate) {
        const auto params = MethodParams::make(in.f.degree(), norm);
        const auto c = certify_from_E(certificate_kind_for(cfg.method),
                                      quality_E(in.f, in.z0, norm), params, {pessimistic});
        if (!c.satisfied) {
          out << io::certificate_to_json(c).dump(2) << '\n';
          err << "certificate not satisfied at the initial point\n";
          return exit_certificate;
        }
      }
      const auto tr = run_solve(in.f, in.z0, cfg);
      if (format == "csv") {
        out << trace_to_csv(tr);
      } else {
        out << trace_to_json(tr).dump(2) << '\n';
      }
      if (tr.status == RunStatus::error) {
        // z0 was validated above, so any failure here arose during iteration.
        err << tr.message << '\n';
        return exit_numerical;
      }
      return tr.status == RunStatus::converged ? exit_ok : exit_not_converged;
    }

    if (*cert) {
      const auto in = load_inputs(poly_file, point_file, point_name, false);
      require_distinct(in.z0);
      std::vector<std::string> names;
      if (method_name == "all") {
        names = {"localization", "ehrlich", "nourein"};
      } else {
        names = {method_name};
      }
      io::Json result = io::Json::object();
      bool all_ok = true;
      for (const auto& name : names) {
        const auto c = certify(parse_kind(name), in.f, in.z0, norm, {pessimistic});
        all_ok = all_ok && c.satisfied;
        result[names.size() == 1 ? std::string("certificate") : name] = io::certificate_to_json(c);
      }
      io::Json j = names.size() == 1 ? result["certificate"] : result;
      if (disks) {
        try {
          j["disks"] = io::disks_to_json(inclusion_disks(in.f, in.z0, norm));
        } catch (const Error& e) {
          j["disks"] = nullptr;
          j["disks_error"] = e.what();
        }
      }
      out << j.dump(2) << '\n';
      return all_ok ? exit_ok : exit_not_converged;
    }

    if (*cmp) {
      const auto [lo, hi] = parse_range(n_range);
      const auto rows = compare_table(lo, hi, norm);
      if (compare_format == "json") {
        io::Json arr = io::Json::array();
        const auto o = [](const std::optional<double>& v) {
          return v ? io::Json(io::format_double(*v)) : io::Json(nullptr);
        };
        const auto ob = [](const std::optional<bool>& v) {
          return v ? io::Json(*v) : io::Json(nullptr);
        };
        for (const auto& r : rows) {
          io::Json e;
          e["n"] = r.n;
          e["ehrlich_linear"] = io::format_double(r.ehrlich_linear);
          e["ehrlich_condition"] = io::format_double(r.ehrlich_condition);
          e["ehrlich_lp"] = o(r.ehrlich_lp);
          e["petkovic_herceg_42"] = o(r.petkovic_herceg);
          e["ehrlich_dominates"] = ob(r.ehrlich_dominates());
          e["ehrlich_linear_dominates"] = ob(r.ehrlich_linear_dominates());
          e["nourein_linear"] = io::format_double(r.nourein_linear);
          e["nourein_condition"] = io::format_double(r.nourein_condition);
          e["nourein_lp"] = o(r.nourein_lp);
          e["nedic_3"] = o(r.nedic);
          e["nourein_dominates"] = ob(r.nourein_dominates());
          e["nourein_linear_dominates"] = ob(r.nourein_linear_dominates());
          arr.push_back(std::move(e));
        }
        out << arr.dump(2) << '\n';
      } else {
        out << compare_to_csv(rows);
      }
      return exit_ok;
    }

    out << constants_json().dump(2) << '\n';
    return exit_ok;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return exit_numerical;
  }
}

}  // namespace simulroots

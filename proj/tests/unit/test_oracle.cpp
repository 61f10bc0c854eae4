#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <numbers>

#include "simulroots/errors.hpp"
#include "simulroots/io.hpp"
#include "simulroots/oracle.hpp"
#include "support.hpp"

using namespace simulroots;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const NormParameter kInf = NormParameter::infinity();

// Smallest distance from x to any element of the set.
double dist_to_set(Complex x, const std::vector<Complex>& set) {
  double d = INFINITY;
  for (const Complex s : set) d = std::min(d, std::abs(x - s));
  return d;
}
}  // namespace

TEST_CASE("reference roots of simple polynomials") {
  const auto q = reference_roots(MonicPolynomial({-1.0, 0.0}));
  for (const Complex r : q.roots) CHECK(dist_to_set(r, {1.0, -1.0}) == 0.0);

  const auto c = reference_roots(MonicPolynomial({-1.0, 0.0, 0.0}));
  const double s = std::sqrt(3.0) / 2;
  for (const Complex r : c.roots) CHECK(dist_to_set(r, {1.0, {-0.5, s}, {-0.5, -s}}) < 1e-16);
}

TEST_CASE("product of (x - k) for k = 1..8 recovered at 128 bits") {
  std::vector<Complex> roots;
  for (int k = 1; k <= 8; ++k) roots.push_back(k);
  const auto f = MonicPolynomial::from_roots(roots);
  const auto ref = reference_roots(f, {.precision_bits = 128});
  PrecisionScope scope(128);
  for (const auto& x : ref.exact) {
    XReal best = 1;
    for (int k = 1; k <= 8; ++k) {
      const XReal d = abs(x - XComplex(XReal(k), XReal(0)));
      if (d < best) best = d;
    }
    CHECK(best < XReal("1e-20"));
  }
}

TEST_CASE("oracle self-consistency under a different starting rotation") {
  for (const auto& inst : io::load_corpus(SIMULROOTS_CORPUS)) {
    if (inst.has_tag("double-root")) continue;
    const auto a = reference_roots(inst.polynomial, {.precision_bits = 256});
    const auto b = reference_roots(inst.polynomial, {.precision_bits = 256, .rotation = 1.234});
    INFO(inst.name);
    PrecisionScope scope(256);
    for (const auto& x : a.exact) {
      XReal best = 1e10;
      for (const auto& y : b.exact) {
        const XReal d = abs(x - y);
        if (d < best) best = d;
      }
      CHECK(best <= XReal("1e-25") * (1 + abs(x)));
    }
  }
}

TEST_CASE("oracle roots match the construction of corpus instances") {
  for (const auto& inst : io::load_corpus(SIMULROOTS_CORPUS)) {
    if (!inst.roots) continue;
    const auto ref = reference_roots(inst.polynomial);
    INFO(inst.name);
    for (const Complex r : *inst.roots) {
      CHECK(dist_to_set(r, ref.roots) <= 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(r)));
    }
  }
}

TEST_CASE("oracle rejects multiple roots") {
  CHECK_THROWS_AS(reference_roots(MonicPolynomial({1.0, -2.0})), Error);
}

TEST_CASE("precision from the environment") {
  ::setenv("SIMULROOTS_PRECISION_BITS", "300", 1);
  CHECK(oracle_precision_bits() == 300);
  ::setenv("SIMULROOTS_PRECISION_BITS", "64", 1);
  CHECK(oracle_precision_bits() == 128);
  ::unsetenv("SIMULROOTS_PRECISION_BITS");
  CHECK(oracle_precision_bits() == 256);
}

TEST_CASE("true errors") {
  const MonicPolynomial f({-1.0, 0.0});
  const auto ref = reference_roots(f);
  const std::vector<ApproximationVector> its{ApproximationVector({1.1, -0.9}),
                                             ApproximationVector({1.0, -1.0})};
  const auto e = true_errors(its, ref, kInf);
  CHECK_THAT(e[0], WithinRel(0.1, 1e-14));
  CHECK(e[1] == 0.0);
  CHECK_THAT(true_errors(its, ref, NormParameter(1.0))[0], WithinRel(0.2, 1e-14));
  // component order of the iterate does not matter
  const std::vector<ApproximationVector> swapped{ApproximationVector({-0.9, 1.1})};
  CHECK_THAT(true_errors(swapped, ref, kInf)[0], WithinRel(0.1, 1e-14));
}

TEST_CASE("matching") {
  const std::vector<Complex> roots{0.0, 1.0, 2.0};
  const std::vector<Complex> z{1.9, 0.1, 1.05};
  const auto m = match_to_roots(z, roots);
  CHECK(m.assignment == std::vector<std::size_t>{2, 0, 1});
  CHECK_THAT(m.cost, WithinAbs(0.25, 1e-15));
  REQUIRE(m.runner_up.has_value());
  CHECK(*m.runner_up > m.cost);
  // equidistant components make the matching ambiguous
  const std::vector<Complex> mid{0.5, 0.5 + 1e-300};
  const std::vector<Complex> two{0.0, 1.0};
  CHECK_THROWS_AS(match_to_roots(mid, two), Error);
}

TEST_CASE("empirical order") {
  const std::vector<double> quad{1e-1, 1e-2, 1e-4, 1e-8};
  const auto q = empirical_order(quad);
  REQUIRE(q.ratios.size() == 2);
  CHECK_THAT(q.ratios[0], WithinRel(2.0, 1e-12));
  CHECK_THAT(q.ratios[1], WithinRel(2.0, 1e-12));
  CHECK_THAT(q.plateau, WithinRel(2.0, 1e-12));

  const std::vector<double> cubic{1e-1, 1e-3, 1e-9};
  const auto c = empirical_order(cubic);
  REQUIRE(c.ratios.size() == 1);
  CHECK_THAT(c.plateau, WithinRel(3.0, 1e-12));

  const std::vector<double> short_seq{1e-1, 1e-3};
  CHECK_THROWS_AS(empirical_order(short_seq), Error);
  const std::vector<double> floored{1e-1, 1e-3, 1e-14};
  CHECK_THROWS_AS(empirical_order(floored), Error);
}

TEST_CASE("Ehrlich on the degree-8 corpus instance is third order") {
  const auto corpus = io::load_corpus(SIMULROOTS_CORPUS);
  const auto it = std::find_if(corpus.begin(), corpus.end(),
                               [](const auto& c) { return c.name == "wilkinson8"; });
  REQUIRE(it != corpus.end());
  const auto tr = extended_trace(Method::ehrlich, it->polynomial, it->point("near"),
                                 {.precision_bits = 512});
  const auto ref = reference_roots(it->polynomial, {.precision_bits = 1024});
  const auto errs = true_errors(tr.iterates, ref, kInf);
  const auto est = empirical_order(errs, std::ldexp(1.0, -500));
  CHECK(est.plateau >= 2.7);
  CHECK(est.plateau <= 3.3);
}

TEST_CASE("extended step agrees with the double step") {
  std::mt19937_64 rng(61);
  const auto roots = oracle::random_roots(rng, 6);
  const auto f = MonicPolynomial::from_roots(roots);
  const ApproximationVector z(oracle::perturbed(rng, roots, 0.05));
  for (const auto m : {Method::weierstrass, Method::ehrlich, Method::ehrlich_derivative, Method::nourein}) {
    CHECK(oracle::max_rel_diff(extended_step(m, f, z).vector(), step(m, f, z).z.vector()) < 1e-12);
  }
}

TEST_CASE("log-domain errors and order agree with the double versions") {
  const std::vector<double> cubic{1e-1, 1e-3, 1e-9, 1e-27};
  std::vector<double> logs;
  for (const double e : cubic) logs.push_back(std::log(e));
  const auto a = empirical_order(cubic, 1e-40);
  const auto b = empirical_order_log(logs, std::log(1e-40));
  REQUIRE(a.ratios.size() == b.ratios.size());
  for (std::size_t k = 0; k < a.ratios.size(); ++k) CHECK_THAT(b.ratios[k], WithinRel(a.ratios[k], 1e-12));
  // errors far below the double range still give ratios
  CHECK_THAT(empirical_order_log(std::vector<double>{-10, -40, -160, -640, -2560}, -5000).plateau,
             WithinRel(4.0, 1e-12));

  const MonicPolynomial f({-1.0, 0.0});
  const auto ref = reference_roots(f, {.precision_bits = 1024});
  PrecisionScope scope(ref.precision_bits);
  std::vector<XVector> its(2);
  its[0] = {XComplex(XReal("1.1"), XReal(0)), XComplex(XReal("-0.9"), XReal(0))};
  its[1] = {XComplex(XReal(1) + pow(XReal(2), -600), XReal(0)), XComplex(XReal(-1), XReal(0))};
  const auto le = true_log_errors(its, ref, kInf);
  CHECK_THAT(le[0], WithinRel(std::log(0.1), 1e-12));
  CHECK_THAT(le[1], WithinRel(-600 * std::numbers::ln2, 1e-12));
}

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "simulroots/errors.hpp"
#include "simulroots/oracle.hpp"
#include "simulroots/simul.hpp"
#include "support.hpp"

using namespace simulroots;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const MonicPolynomial kQuad({-1.0, 0.0});
const NormParameter kInf = NormParameter::infinity();
constexpr Method kAll[] = {Method::weierstrass, Method::ehrlich, Method::ehrlich_derivative,
                           Method::nourein};

ApproximationVector av(std::vector<Complex> v) { return ApproximationVector(std::move(v)); }
}  // namespace

TEST_CASE("Weierstrass corrections") {
  const auto w0 = weierstrass_corrections(kQuad, av({1.0, -1.0}));
  CHECK(w0[0] == Complex(0.0));
  CHECK(w0[1] == Complex(0.0));

  const auto w = weierstrass_corrections(kQuad, av({2.0, 0.0}));
  CHECK(w[0] == Complex(1.5, 0.0));
  CHECK(w[1] == Complex(0.5, 0.0));

  const auto f = MonicPolynomial::from_roots(std::vector<Complex>{1, 2, 3});
  const std::vector<Complex> z{1.1, 1.9, 3.2};
  const auto got = weierstrass_corrections(f, av(z));
  const auto want = oracle::W(f, z);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(got[i] - oracle::D(want[i])) < 1e-15);
  // Product form: W_i = prod_j (z_i - xi_j) / prod_{j != i} (z_i - z_j) with xi = (1, 2, 3).
  CHECK_THAT(got[0].real(), WithinRel(0.1 * -0.9 * -1.9 / ((1.1 - 1.9) * (1.1 - 3.2)), 1e-14));
}

TEST_CASE("separations") {
  auto s = separations(av({0.0, 1.0, 3.0}));
  CHECK(s.d == std::vector<double>{1.0, 1.0, 2.0});
  CHECK(s.delta == 1.0);

  s = separations(av({0.0, 0.0}));
  CHECK(s.d == std::vector<double>{0.0, 0.0});
  CHECK(s.delta == 0.0);

  s = separations(av({Complex(1, 1), Complex(1, -1), 4.0}));
  CHECK(s.d[0] == 2.0);
  CHECK(s.d[1] == 2.0);
  CHECK_THAT(s.d[2], WithinRel(std::sqrt(10.0), 1e-15));
  CHECK(s.delta == 2.0);
}

TEST_CASE("quality measure E") {
  CHECK(quality_E(kQuad, av({1.0, -1.0}), kInf) == 0.0);
  CHECK(quality_E(kQuad, av({2.0, 0.0}), kInf) == 0.75);
  CHECK(quality_E(kQuad, av({2.0, 0.0}), NormParameter(1.0)) == 1.0);
  CHECK_THROWS_AS(quality_E(kQuad, av({1.0, 1.0}), kInf), DistinctnessViolation);
}

TEST_CASE("E vanishes exactly at root vectors") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 7;
    const auto roots = oracle::random_roots(rng, n);
    const auto f = MonicPolynomial::from_roots(roots);
    const auto ref = reference_roots(f, {.precision_bits = 128});
    for (const double p : {1.0, 2.0, double(INFINITY)}) {
      const NormParameter norm(p);
      CHECK(quality_E(f, av(ref.roots), norm) < 1e-13);
      CHECK(quality_E(f, av(oracle::perturbed(rng, ref.roots, 0.01)), norm) > 1e-6);
    }
  }
}

TEST_CASE("Weierstrass step") {
  CHECK(step_weierstrass(kQuad, av({1.0, -1.0})).z == av({1.0, -1.0}));
  CHECK(step_weierstrass(kQuad, av({2.0, 0.0})).z == av({0.5, -0.5}));

  // monic Chebyshev-like quartic x^4 - x^2 + 1/8
  const MonicPolynomial f({0.125, 0.0, -1.0, 0.0});
  const double c1 = std::sqrt((1 + std::sqrt(0.5)) / 2), c2 = std::sqrt((1 - std::sqrt(0.5)) / 2);
  std::mt19937_64 rng(22);
  const auto z = oracle::perturbed(rng, {c1, c2, -c2, -c1}, 0.05);
  const auto got = step_weierstrass(f, av(z)).z.vector();
  CHECK(oracle::max_rel_diff(got, oracle::weierstrass(f, z)) < 1e-12);
}

TEST_CASE("Ehrlich derivative form") {
  CHECK(step_ehrlich_derivative_form(kQuad, av({1.0, -1.0})).z == av({1.0, -1.0}));
  const auto out = step_ehrlich_derivative_form(kQuad, av({2.0, 0.0})).z;
  CHECK_THAT(out[0].real(), WithinAbs(0.8, 1e-15));
  CHECK(oracle::max_rel_diff(out.vector(), oracle::ehrlich(kQuad, {2.0, 0.0})) < 1e-15);
  CHECK(oracle::max_rel_diff(out.vector(), step_ehrlich_bs_form(kQuad, av({2.0, 0.0})).z.vector()) <
        1e-14);

  const auto f = MonicPolynomial::from_roots(std::vector<Complex>{1, Complex(0, 2), -1.5});
  std::mt19937_64 rng(23);
  const auto z = av(oracle::perturbed(rng, {1, Complex(0, 2), -1.5}, 0.05));
  CHECK(oracle::max_rel_diff(step_ehrlich_derivative_form(f, z).z.vector(),
                             step_ehrlich_bs_form(f, z).z.vector()) < 1e-10);
  CHECK(oracle::max_rel_diff(step_ehrlich_derivative_form(f, z).z.vector(),
                             oracle::ehrlich(f, z.vector())) < 1e-12);
}

TEST_CASE("Werner equivalence on random degree-6 instances with E < 0.1") {
  std::mt19937_64 rng(24);
  int checked = 0;
  while (checked < 200) {
    const auto roots = oracle::random_roots(rng, 6);
    const auto f = MonicPolynomial::from_roots(roots);
    const auto z = av(oracle::perturbed(rng, roots, 0.08));
    if (quality_E(f, z, kInf) >= 0.1) continue;
    ++checked;
    const auto a = step_ehrlich_derivative_form(f, z).z.vector();
    const auto b = step_ehrlich_bs_form(f, z).z.vector();
    CHECK(oracle::max_rel_diff(a, b) < 1e-10);
  }
}

TEST_CASE("Nourein step") {
  CHECK(step_nourein(kQuad, av({1.0, -1.0})).z == av({1.0, -1.0}));
  const std::vector<Complex> z{1.2, -0.8};
  CHECK(oracle::max_rel_diff(step_nourein(kQuad, av(z)).z.vector(), oracle::nourein(kQuad, z)) <
        1e-15);

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const auto roots = oracle::random_roots(rng, 5);
    const auto f = MonicPolynomial::from_roots(roots);
    const auto zz = oracle::perturbed(rng, roots, 0.05);
    CHECK(oracle::max_rel_diff(step_nourein(f, av(zz)).z.vector(), oracle::nourein(f, zz)) < 1e-11);
  }
}

TEST_CASE("Nourein reduces E at fourth order on a degree-5 instance") {
  const std::vector<Complex> roots{1, -1, Complex(0, 1), Complex(2, 1), Complex(-1, -2)};
  const auto f = MonicPolynomial::from_roots(roots);
  std::mt19937_64 rng(26);
  const auto z0 = oracle::perturbed(rng, roots, 0.02);
  const auto tr = extended_trace(Method::nourein, f, ApproximationVector(z0),
                                 {.precision_bits = 1024, .max_steps = 6});
  REQUIRE(tr.E.size() >= 4);
  CHECK(tr.E[1] < tr.E[0]);
  const auto ref = reference_roots(f, {.precision_bits = 1280});
  const auto errs = true_errors(tr.iterates, ref, kInf);
  const auto est = empirical_order(errs, 1e-300);
  CHECK(est.plateau > 3.7);
  CHECK(est.plateau < 4.3);
}

TEST_CASE("fixed points: the root vector is returned exactly by every method") {
  const std::vector<Complex> roots{1, 2, 3, 4};
  const auto f = MonicPolynomial::from_roots(roots);
  for (const auto m : kAll) CHECK(step(m, f, av(roots)).z == av(roots));
}

TEST_CASE("translation equivariance") {
  std::mt19937_64 rng(27);
  std::uniform_int_distribution<int> grid(-16, 16);
  const Complex shift(0.5, -0.25);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < n) {
      const Complex c(grid(rng) / 8.0, grid(rng) / 8.0);
      if (std::all_of(roots.begin(), roots.end(), [&](Complex s) { return std::abs(s - c) > 0.3; }))
        roots.push_back(c);
    }
    std::vector<Complex> shifted(roots);
    for (auto& r : shifted) r += shift;
    const auto f = MonicPolynomial::from_roots(roots);
    const auto g = MonicPolynomial::from_roots(shifted);
    const auto z = oracle::perturbed(rng, roots, 0.05);
    std::vector<Complex> zs(z);
    for (auto& x : zs) x += shift;
    for (const auto m : kAll) {
      auto a = step(m, f, av(z)).z.vector();
      for (auto& x : a) x += shift;
      const auto b = step(m, g, av(zs)).z.vector();
      INFO(to_string(m) << " n=" << n);
      CHECK(oracle::max_rel_diff(b, a) < 1e-12);
    }
  }
}

TEST_CASE("permutation equivariance") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 8;
    const auto roots = oracle::random_roots(rng, n);
    const auto f = MonicPolynomial::from_roots(roots);
    const auto z = oracle::perturbed(rng, roots, 0.1);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Complex> zp(n);
    for (int i = 0; i < n; ++i) zp[i] = z[perm[i]];
    for (const auto m : kAll) {
      const auto a = step(m, f, av(z)).z;
      const auto b = step(m, f, av(zp)).z;
      for (int i = 0; i < n; ++i) CHECK(std::abs(b[i] - a[perm[i]]) <= 1e-14 * std::abs(a[perm[i]]) + 1e-15);
    }
  }
}

TEST_CASE("step errors") {
  CHECK_THROWS_AS(step_weierstrass(kQuad, av({1.0, 1.0})), DistinctnessViolation);
  for (const auto m : kAll) CHECK_THROWS_AS(step(m, kQuad, av({0.5, 0.5})), DistinctnessViolation);
  // f = x^2 - 4x at z = (-0.5, 1): W_1 = 2.25 / -1.5 = -1.5 = z_1 - z_2.
  const MonicPolynomial g({0.0, -4.0});
  CHECK_THROWS_AS(step_nourein(g, av({-0.5, 1.0})), ShiftedCollision);
  CHECK(parse_method("ehrlich-derivative") == Method::ehrlich_derivative);
  CHECK_THROWS_AS(parse_method("newton"), Error);
}

TEST_CASE("post-step collision is flagged, not thrown") {
  // x^2 - 2 at z = (1, 2): W = (1, 2), both components land on 0.
  const MonicPolynomial f({-2.0, 0.0});
  const auto out = step_weierstrass(f, av({1.0, 2.0}));
  CHECK(out.post_step_collision);
  CHECK(out.z[0] == out.z[1]);
}

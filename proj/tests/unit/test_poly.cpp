#include <catch_amalgamated.hpp>

#include <random>

#include "simulroots/errors.hpp"
#include "simulroots/oracle.hpp"
#include "simulroots/poly.hpp"
#include "support.hpp"

using namespace simulroots;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("eval of x^2 - 1") {
  const MonicPolynomial f({-1.0, 0.0});
  CHECK(eval(f, 2.0) == Complex(3.0, 0.0));
  CHECK(eval(f, 1.0) == Complex(0.0, 0.0));
}

TEST_CASE("eval matches term-by-term summation") {
  // x^3 + (2+i) x - 5 at 1+i is -6 + 5i.
  const MonicPolynomial f({Complex(-5, 0), Complex(2, 1), Complex(0, 0)});
  const Complex x(1, 1);
  const auto expect = oracle::D(oracle::eval_terms(f, oracle::L(x)));
  CHECK(std::abs(eval(f, x) - expect) < 1e-14);
  CHECK(std::abs(eval(f, x) - Complex(-6, 5)) < 1e-14);
}

TEST_CASE("eval_derivative small cases") {
  CHECK(eval_derivative(MonicPolynomial({-1.0, 0.0}), 2.0) == Complex(4.0, 0.0));
  CHECK(eval_derivative(MonicPolynomial({0.0, 0.0, 0.0}), 0.0) == Complex(0.0, 0.0));
}

TEST_CASE("eval_derivative agrees with central differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> c(5);
    for (auto& x : c) x = {u(rng), u(rng)};
    const MonicPolynomial f(c);
    const Complex x(u(rng), u(rng));
    const double h = 1e-6;
    const Complex fd = (eval(f, x + h) - eval(f, x - h)) / (2.0 * h);
    const Complex d = eval_derivative(f, x);
    INFO("trial " << trial);
    CHECK(std::abs(d - fd) <= 1e-6 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("from_roots and product form agree with coefficient eval") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    const auto roots = oracle::random_roots(rng, n, 0.4);
    const auto f = MonicPolynomial::from_roots(roots);
    const auto ref = reference_roots(f, {.precision_bits = 128});
    for (int s = 0; s < 5; ++s) {
      const Complex x(2 * u(rng), 2 * u(rng));
      Complex prod = 1.0;
      for (const Complex r : ref.roots) prod *= x - r;
      const Complex v = eval(f, x);
      CHECK(std::abs(v - prod) <= 1e-9 * std::max(std::abs(v), 1e-3));
    }
  }
}

TEST_CASE("from_general normalizes and the constructor validates degree") {
  const std::vector<Complex> g{4.0, 0.0, 2.0};  // 2x^2 + 4
  const auto f = MonicPolynomial::from_general(g);
  REQUIRE(f.degree() == 2);
  CHECK(f.coefficients()[0] == Complex(2.0, 0.0));
  CHECK(f.coefficients()[1] == Complex(0.0, 0.0));
  CHECK_THROWS_AS(MonicPolynomial(std::vector<Complex>{1.0}), Error);
  const std::vector<Complex> zero_lead{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(MonicPolynomial::from_general(zero_lead), Error);
  CHECK(MonicPolynomial({Complex(3, 4), -1.0}).max_coefficient_modulus() == 5.0);
}

TEST_CASE("from_roots of integer roots is exact") {
  std::vector<Complex> r{1, 2, 3, 4};
  const auto f = MonicPolynomial::from_roots(r);
  // x^4 - 10x^3 + 35x^2 - 50x + 24
  const std::vector<Complex> expect{24.0, -50.0, 35.0, -10.0};
  for (std::size_t k = 0; k < 4; ++k) CHECK(f.coefficients()[k] == expect[k]);
}

TEST_CASE("compensated eval is accurate next to the roots of (x-1)...(x-8)") {
  // Integer roots give exact coefficients, and the product form is accurate
  // to a few ulps, so it serves as the reference where plain Horner loses
  // most of its digits to cancellation.
  std::vector<Complex> roots;
  for (int k = 1; k <= 8; ++k) roots.push_back(k);
  const auto f = MonicPolynomial::from_roots(roots);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1e-6, 1e-6);
  double worst_plain = 0, worst_comp = 0;
  for (int t = 0; t < 200; ++t) {
    const Complex x = Complex(1 + t % 8, 0) + Complex(u(rng), u(rng));
    Complex ref{1.0};
    for (const Complex r : roots) ref *= x - r;
    worst_plain = std::max(worst_plain, std::abs(eval(f, x) - ref) / std::abs(ref));
    worst_comp = std::max(worst_comp, std::abs(eval_compensated(f, x) - ref) / std::abs(ref));
  }
  CHECK(worst_comp < 1e-14);
  CHECK(worst_plain > 1e-8);  // the cancellation is real
  CHECK(eval_compensated(f, Complex(0.5, 0.25)) == eval_compensated(f, Complex(0.5, 0.25)));
  CHECK(eval_compensated(MonicPolynomial({-1.0, 0.0}), 3.0) == Complex(8.0));
}

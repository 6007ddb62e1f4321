#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kortho/gammafn.hpp"
#include "kortho/quadrature.hpp"

using namespace kortho;
namespace mp = boost::multiprecision;

TEST_CASE("exponential integral over (0, inf)") {
  auto ctx = PrecisionContext::make();
  EndpointProfile prof;
  auto r = integrate_zero_inf([](const Real& x) { return mp::exp(-x); }, prof, ctx);
  CHECK(r.converged);
  CHECK(abs(r.value - 1) < Real("1e-40"));
}

TEST_CASE("gamma integrals with endpoint singularity") {
  auto ctx = PrecisionContext::make();
  for (const char* as : {"0.5", "0.25", "1.75"}) {
    Real a(as);
    EndpointProfile prof;
    prof.sing_exp_at_zero = a - 1;
    auto r = integrate_zero_inf(
        [&a](const Real& x) { return mp::exp((a - 1) * mp::log(x) - x); }, prof, ctx);
    CHECK(abs(r.value - gamma(a)) / gamma(a) < Real("1e-40"));
  }
}

TEST_CASE("exp-sqrt decay premap") {
  auto ctx = PrecisionContext::make();
  // int x^{a-1} e^{-c sqrt x} dx = 2 Gamma(2a) / c^{2a}
  Real a("0.75"), c(8);
  EndpointProfile prof;
  prof.sing_exp_at_zero = a - 1;
  prof.decay = DecayClass::ExpSqrt;
  auto r = integrate_zero_inf(
      [&](const Real& x) { return mp::exp((a - 1) * mp::log(x) - c * mp::sqrt(x)); }, prof,
      ctx);
  Real exact = 2 * gamma(2 * a) * mp::exp(-2 * a * mp::log(c));
  CHECK(abs(r.value - exact) / exact < Real("1e-40"));
}

TEST_CASE("endpoint exponents near -1 use the split map") {
  auto ctx = PrecisionContext::make();
  for (const char* es : {"0.04", "0.004", "0.0004"}) {
    Real e(es);
    EndpointProfile prof;
    prof.sing_exp_at_zero = e - 1;
    prof.decay = DecayClass::ExpSqrt;
    auto r = integrate_zero_inf(
        [&e](const Real& x) { return mp::exp((e - 1) * mp::log(x) - 8 * mp::sqrt(x)); }, prof,
        ctx);
    Real exact = 2 * gamma(2 * e) * mp::exp(-2 * e * mp::log(Real(8)));
    CHECK(abs(r.value - exact) / exact < Real("1e-45"));
  }
}

TEST_CASE("gaussian decay") {
  auto ctx = PrecisionContext::make();
  EndpointProfile prof;
  prof.decay = DecayClass::ExpQuadratic;
  auto r = integrate_zero_inf([](const Real& x) { return mp::exp(-x * x); }, prof, ctx);
  Real exact = mp::sqrt(const_pi()) / 2;
  CHECK(abs(r.value - exact) / exact < Real("1e-40"));
}

TEST_CASE("finite-interval beta integrals") {
  auto ctx = PrecisionContext::make();
  // int_0^1 x^{p-1} (1-x)^{q-1} dx = B(p, q), singular factors supplied
  // through the endpoint exponents.
  auto one = [](const Real&) { return Real(1); };
  Real p("0.5"), q("0.5");
  auto r = integrate_finite(one, Real(0), Real(1), p - 1, q - 1, ctx);
  CHECK(abs(r.value - const_pi()) < Real("1e-40"));
  auto r2 = integrate_finite(one, Real(0), Real(1), Real("-0.9"), Real("0.5"), ctx);
  CHECK(abs(r2.value - beta(Real("0.1"), Real("1.5"))) < Real("1e-38"));
}

TEST_CASE("mellin line integral picks up exp(-x)") {
  auto ctx = PrecisionContext::make();
  // (1/2 pi i) int Gamma(s) x^{-s} ds = e^{-x}
  GammaProductSpec spec;
  spec.num_shifts = {Real(0)};
  auto r = mellin_line_integral(spec, Real(1), Real("1.5"), ctx);
  Real exact = mp::exp(Real("-1.5"));
  CHECK(abs(r.value - exact) / exact < Real("1e-35"));
  CHECK(r.imag_residual < Real("1e-35"));
}

TEST_CASE("singularity exponent precondition") {
  auto ctx = PrecisionContext::make();
  EndpointProfile prof;
  prof.sing_exp_at_zero = Real(-1);
  CHECK_THROWS_AS(
      integrate_zero_inf([](const Real& x) { return mp::exp(-x); }, prof, ctx),
      std::domain_error);
}

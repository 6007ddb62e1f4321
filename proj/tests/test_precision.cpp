#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kortho/gammafn.hpp"
#include "kortho/precision.hpp"
#include "kortho/report.hpp"

using namespace kortho;
namespace mp = boost::multiprecision;

static double d(const Real& x) { return x.convert_to<double>(); }

TEST_CASE("context defaults and eps") {
  auto ctx = PrecisionContext::make();
  CHECK(ctx.bits == 320);
  CHECK(d(ctx.verify_tol) == doctest::Approx(1e-25));
  Real eps = ctx.eps();
  CHECK(abs(mp::log2(eps) + 320) < Real("1e-30"));
}

TEST_CASE("pi and euler constants") {
  PrecisionContext::make();
  Real pi_ref("3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798");
  CHECK(abs(const_pi() - pi_ref) < Real("1e-95"));
  Real gamma_ref("0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951");
  CHECK(abs(const_euler() - gamma_ref) < Real("1e-95"));
}

TEST_CASE("gamma function anchors") {
  PrecisionContext::make();
  Real pi = const_pi();
  CHECK(abs(gamma(Real("0.5")) - mp::sqrt(pi)) < Real("1e-90"));
  CHECK(abs(gamma(Real(5)) - 24) < Real("1e-90"));
  CHECK(abs(gamma(Real("1.5")) - mp::sqrt(pi) / 2) < Real("1e-90"));
  CHECK(abs(beta(Real("0.5"), Real("0.5")) - pi) < Real("1e-90"));
  CHECK(abs(pochhammer(Real(3), 4) - 360) < Real("1e-90"));
  CHECK_THROWS_AS(gamma(Real(-2)), pole_error);
}

TEST_CASE("reflection via gamma") {
  PrecisionContext::make();
  // Gamma(x) Gamma(1-x) = pi / sin(pi x) at x = 1/4
  Real x("0.25");
  Real lhs = gamma(x) * gamma(1 - x);
  Real rhs = const_pi() / mp::sin(const_pi() * x);
  CHECK(abs(lhs - rhs) / rhs < Real("1e-90"));
}

TEST_CASE("complex log-gamma spot value") {
  auto ctx = PrecisionContext::make();
  // |Gamma(1/2 + i t)|^2 = pi / cosh(pi t), t = 1
  Complex s{Real("0.5"), Real(1)};
  Complex lg = log_gamma_complex(s, ctx);
  Real mod_sq = mp::exp(2 * lg.re);
  Real ref = const_pi() / mp::cosh(const_pi());
  CHECK(abs(mod_sq - ref) / ref < Real("1e-80"));
}

TEST_CASE("scaled residual policy") {
  PrecisionContext::make();
  CHECK(d(scaled_residual(Real("0.5"), Real("0.25"))) == doctest::Approx(0.25));
  CHECK(d(scaled_residual(Real(101), Real(100))) == doctest::Approx(0.01));
}

TEST_CASE("report pass flag") {
  auto ctx = PrecisionContext::make();
  auto r = make_report("x", "1.1", Real(1), Real(1), ctx.verify_tol);
  CHECK(r.pass);
  auto r2 = make_report("x", "1.1", Real(2), Real(1), ctx.verify_tol);
  CHECK(!r2.pass);
}

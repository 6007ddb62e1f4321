#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kortho/composition.hpp"
#include "kortho/gammafn.hpp"

using namespace kortho;
namespace mp = boost::multiprecision;

TEST_CASE("laguerre composition identity with anchor value") {
  auto ctx = PrecisionContext::make();
  Real half("0.5");
  MeasureKind m{MeasureTag::Laguerre, half, Real(0), Real(1)};
  auto rep = verify_identity(m, LaplacePair::power(Real(0)), Polynomial::monomial(0),
                             Polynomial::monomial(0), ctx);
  CHECK(rep.pass);
  CHECK(rep.residual < Real("1e-40"));
  // with p = q = psi = 1 both sides reduce to Gamma(nu + 1) = Gamma(3/2)
  CHECK(abs(rep.computed - gamma(Real("1.5"))) < Real("1e-40"));

  auto rep2 = verify_identity(m, LaplacePair::power(half), Polynomial::monomial(1),
                              Polynomial::monomial(2), ctx);
  CHECK(rep2.pass);
  CHECK(rep2.residual < Real("1e-40"));
}

TEST_CASE("theta closed form on power pairs") {
  auto ctx = PrecisionContext::make();
  // theta{phi} for psi = x^a has phi = Gamma(a+1) t^a and
  // theta^k{phi} = Gamma(a+k+1) t^{a+k}.
  Real a("0.5"), t(2);
  LaplacePair pair = LaplacePair::power(a);
  for (unsigned k = 0; k <= 3; ++k) {
    Real expect = gamma(a + Real(k + 1)) * mp::exp((a + Real(k)) * mp::log(t));
    CHECK(abs(theta_power_apply(k, pair, t, ctx) - expect) < Real("1e-80"));
  }
}

TEST_CASE("jacobi kernel is continuous across the closed-form split") {
  auto ctx = PrecisionContext::make();
  MeasureKind m{MeasureTag::Jacobi, Real(0), Real(0), Real(1)};
  Real below = omega_kernel(m, Real(1) - Real("1e-20"), ctx);
  Real above = omega_kernel(m, Real(1) + Real("1e-20"), ctx);
  CHECK(abs(below - above) / above < Real("1e-18"));
}

TEST_CASE("prudnikov weight orthonormality through composition") {
  auto ctx = PrecisionContext::make();
  Real half("0.5");
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= n; ++m) {
      auto rep = prudnikov_check(half, half, n, m, ctx);
      CHECK(rep.pass);
      CHECK(rep.residual < Real("1e-40"));
    }
}

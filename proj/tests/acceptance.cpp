// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure. Tolerances and parameter grids are fixed; everything runs at the
// default 320-bit working precision.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "kortho/composition.hpp"
#include "kortho/gammafn.hpp"
#include "kortho/multi.hpp"
#include "kortho/orthopoly.hpp"
#include "kortho/rho_calculus.hpp"

using namespace kortho;
namespace mp = boost::multiprecision;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_t0;

void line(int criterion, bool pass, const std::string& what, const Real& worst) {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_t0).count();
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
            << " (worst " << worst.convert_to<double>() << ", t=" << int(secs) << "s)"
            << std::endl;
  if (!pass) ++g_failures;
}

Real rel(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

int main() {
  auto ctx = PrecisionContext::make();
  g_t0 = std::chrono::steady_clock::now();
  Real pi = const_pi();
  Real half("0.5");

  {  // 1: closed-form weight at nu = 1/2
    Real worst = 0;
    for (const char* xs : {"0.1", "1", "10"}) {
      Real x(xs);
      Real ref = mp::sqrt(pi) * mp::exp(-2 * mp::sqrt(x));
      worst = (std::max)(worst, rel(rho(half, x, ctx), ref));
    }
    line(1, worst < Real("1e-30"), "rho_{1/2} closed form, x in {0.1,1,10}", worst);
  }

  {  // 2: moments, closed form vs quadrature, plus exact anchors
    Real worst = 0;
    for (const char* nus : {"0.25", "0.5", "1.5"}) {
      Real nu(nus);
      PairIntegrator quad(nu, nu);
      for (long mu = 0; mu <= 8; ++mu) {
        Real closed = moment(WeightKind{WeightTag::RhoSq, nu, Real(0)}, Real(mu), ctx);
        Real direct = quad.integrate(Polynomial::monomial(0), mu, ctx);
        worst = (std::max)(worst, rel(direct, closed));
      }
    }
    worst = (std::max)(
        worst, rel(moment(WeightKind{WeightTag::RhoSq, half, Real(0)}, Real(0), ctx), pi / 8));
    worst = (std::max)(worst, rel(moment(WeightKind{WeightTag::RhoSq, half, Real(0)}, Real(1), ctx),
                                  3 * pi / 64));
    line(2, worst < Real("1e-25"), "moments mu=0..8, nu in {0.25,0.5,1.5}, anchors", worst);
  }

  std::vector<OrthoBasis> bases;
  {  // 3: orthonormality of the Gram-route basis
    Real worst = 0;
    for (const char* nus : {"0.25", "0.5", "1.5"}) {
      Real nu(nus);
      OrthoBasis b = gram_construct(WeightKind{WeightTag::RhoSq, nu, Real(0)}, 4, ctx);
      PairIntegrator quad(nu, nu);
      for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
          Real v = quad.integrate(b.poly(n) * b.poly(m), 0, ctx);
          worst = (std::max)(worst, abs(v - ((n == m) ? 1 : 0)));
        }
      bases.push_back(std::move(b));
    }
    line(3, worst < Real("1e-20"), "orthonormality n,m<=4, nu in {0.25,0.5,1.5}", worst);
  }

  {  // 4: Cramer route vs Gram route, coefficientwise
    Real worst = 0;
    size_t bi = 0;
    for (const char* nus : {"0.25", "0.5"}) {
      Real nu(nus);
      const OrthoBasis& b = bases[bi++];
      for (int n = 0; n <= 3; ++n) {
        CramerSystem cs = cramer_construct(nu, n, ctx);
        for (int k = 0; k <= n; ++k)
          worst = (std::max)(worst, abs(cs.coeffs(k) - b.poly(n).coeff(k)) /
                                        abs(b.poly(n).coeff(k)));
      }
    }
    line(4, worst < Real("1e-12"), "route equivalence n<=3, nu in {0.25,0.5}", worst);
  }

  {  // 5: proposition-6 weighted squares
    Real worst = 0;
    for (const char* nus : {"0.25", "1"}) {
      Real nu(nus);
      for (int n = 0; n <= 4; ++n) worst = (std::max)(worst, prop6_check(nu, n, ctx).residual);
    }
    line(5, worst < Real("1e-18"), "proposition 6, n<=4, nu in {0.25,1.0}", worst);
  }

  {  // 6: theorem 1 composition orthogonality
    Real worst = 0;
    for (const char* nus : {"0.25", "0.5"}) {
      Real nu(nus);
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= n; ++m)
          worst = (std::max)(worst, theorem1_check(nu, n, m, ctx).residual);
    }
    line(6, worst < Real("1e-15"), "theorem 1, n,m<=3, nu in {0.25,0.5}", worst);
  }

  {  // 7: third-order ODE residuals
    Real worst = 0;
    for (const char* nus : {"0.25", "0.5", "1.5"}) {
      Real nu(nus);
      for (const char* xs : {"0.5", "1", "2", "5"}) {
        Real x(xs);
        worst = (std::max)(worst, ode_residual_u(nu, x, ctx));
        worst = (std::max)(worst, ode_residual_h(nu, x, ctx));
      }
    }
    line(7, worst < Real("1e-25"), "ODE residuals, x in {0.5,1,2,5}", worst);
  }

  {  // 8: Rodrigues representation + pair-decomposition aggregate
    Real worst = 0, worst_agg = 0;
    Real nu = half;
    const OrthoBasis& b = bases[1];
    for (int n = 0; n <= 3; ++n)
      for (const char* xs : {"0.5", "2"}) {
        Real x(xs);
        Real direct = b.poly(n).eval(x);
        worst = (std::max)(worst, abs(rodrigues_eval(nu, n, x, ctx) - direct) / abs(direct));
        Real agg = 0;
        corollary2_eval(nu, n, x, ctx, &agg);
        worst_agg = (std::max)(worst_agg, agg / b.poly(n).max_abs_coeff());
      }
    line(8, worst < Real("1e-10") && worst_agg < Real("1e-15"),
         "rodrigues n<=3 and vanishing pair aggregate", (std::max)(worst, worst_agg));
  }

  {  // 9: generating-function rearrangement
    Real worst = 0;
    for (int N = 0; N <= 3; ++N)
      worst = (std::max)(worst, abs(generating_partial(half, Real(1), Real("0.1"), N, ctx)
                                        .difference));
    line(9, worst < Real("1e-20"), "generating function partial sums N<=3", worst);
  }

  {  // 10: composition framework across the three measures
    Real worst = 0;
    std::vector<MeasureKind> measures = {
        MeasureKind{MeasureTag::Laguerre, half, Real(0), Real(1)},
        MeasureKind{MeasureTag::Hermite, Real(0), Real(0), Real(1)},
        MeasureKind{MeasureTag::Jacobi, Real(0), Real(0), Real(1)},
    };
    for (const auto& m : measures)
      for (const auto& psi : {LaplacePair::power(Real(0)), LaplacePair::power(half)})
        for (int dp = 0; dp <= 2; ++dp)
          for (int dq = dp; dq <= 2; ++dq)
            worst = (std::max)(worst,
                               verify_identity(m, psi, Polynomial::monomial(dp),
                                               Polynomial::monomial(dq), ctx)
                                   .residual);
    for (int n = 0; n <= 1; ++n)
      for (int m = 0; m <= n; ++m)
        worst = (std::max)(worst, prudnikov_check(half, half, n, m, ctx).residual);
    line(10, worst < Real("1e-18"), "composition identities, 3 measures + weight sequence",
         worst);
  }

  {  // 11: multiple orthogonality
    Real worst_def = 0, worst_t5 = 0, worst_t6 = 0;
    for (const char* nus : {"0", "0.25"}) {
      Real nu(nus);
      for (int n = 1; n <= 2; ++n) {
        Type1Solution s = type1_solve(nu, half, n, n - 1, n - 1, ctx);
        worst_def = (std::max)(worst_def, type1_residual_check(s, ctx).residual);
      }
    }
    for (int n = 0; n <= 2; ++n) {
      Type2Solution s = type2_solve(Real("0.25"), half, n + 1, n, n + 1, ctx);
      worst_def = (std::max)(worst_def, type2_residual_check(s, ctx).residual);
    }
    for (int n = 1; n <= 2; ++n)
      worst_t5 = (std::max)(worst_t5, theorem5_check(Real("0.25"), Real(1), n, ctx).residual);
    for (int n = 0; n <= 1; ++n)
      worst_t6 = (std::max)(worst_t6, theorem6_check(Real("0.25"), half, n, ctx).residual);
    bool rank_ok = theorem4_rank_check(Real("0.25"), 1, 0, 0, ctx).pass;
    bool pass = worst_def < Real("1e-18") && worst_t5 < Real("1e-12") &&
                worst_t6 < Real("1e-15") && rank_ok;
    line(11, pass, "type-1/type-2 residuals, theorems 4-6",
         (std::max)(worst_def, (std::max)(worst_t5, worst_t6)));
  }

  {  // 12: remark-3 witness
    Real worst = 0;
    for (const char* xs : {"0.1", "1", "4"}) {
      Real x(xs);
      Real lhs = rho(half, x, ctx);
      lhs *= lhs;
      Real r = rho(-half, x, ctx);
      worst = (std::max)(worst, abs(lhs - x * r * r));
    }
    line(12, worst < Real("1e-30"), "remark 3 pointwise, x in {0.1,1,4}", worst);
  }

  {  // 13: contour products vs direct products
    Real worst = 0;
    for (const char* nus : {"0.25", "0.5"}) {
      Real nu(nus);
      for (const char* xs : {"0.5", "1", "5"}) {
        Real x(xs);
        Real sq = rho(nu, x, ctx);
        sq *= sq;
        worst = (std::max)(worst, rel(mb_rho_squared(nu, x, ctx), sq));
        Real prod = rho(nu + 1, x, ctx) * rho(nu, x, ctx);
        worst = (std::max)(worst, rel(mb_rho_product(nu, x, ctx), prod));
      }
    }
    line(13, worst < Real("1e-20"), "contour evaluations, x in {0.5,1,5}", worst);
  }

  {  // 14: documented-discrepancy report
    Real nu = half;
    Real worst = 0;
    worst = (std::max)(worst, abs(coeff_d(nu, 0, 0) - gamma(nu + 1)));
    worst = (std::max)(worst, abs(coeff_d(nu, 1, 0) + gamma(nu + 2)));
    worst = (std::max)(worst, abs(coeff_d(nu, 1, 1) - gamma(nu + 2) * (nu + 3)));
    bool flags_ok = true;
    for (unsigned m = 0; m <= 1; ++m)
      for (unsigned r = 0; r <= 1; ++r) {
        auto rep = coeff_d_report(nu, m, r, ctx);
        flags_ok = flags_ok && rep.pass && !rep.note.empty();
      }
    line(14, worst < Real("1e-30") && flags_ok,
         "pair-moment oracle values, discrepancy flagged without failing", worst);
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_t0).count();
  std::cout << (g_failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES")
            << " (" << int(secs) << "s)" << std::endl;
  return g_failures;
}

#ifndef KORTHO_ORTHOPOLY_HPP
#define KORTHO_ORTHOPOLY_HPP

#include <map>
#include <vector>

#include "kortho/polynomial.hpp"
#include "kortho/rho_calculus.hpp"

namespace kortho {

// Closed-form gamma-product moment int_0^inf x^mu w(x) dx.
Real moment(const WeightKind& w, const Real& mu, const PrecisionContext& ctx);

struct MomentTable {
  WeightKind weight;
  std::map<long, Real> values;
};
MomentTable moment_table(const WeightKind& w, long mu_max, const PrecisionContext& ctx);

enum class ConstructionRoute { Gram, Cramer };

struct OrthoBasis {
  WeightKind weight;
  int degree_max{0};
  std::vector<Polynomial> polys;  // orthonormal, leading coefficient > 0
  std::vector<Real> recur_A;      // recur_A[n] = A_{n+1}, n = 0..degree_max-1
  std::vector<Real> recur_B;      // recur_B[n] = B_n,     n = 0..degree_max-1
  ConstructionRoute route{ConstructionRoute::Gram};

  const Polynomial& poly(int n) const { return polys.at(size_t(n)); }
};

// Orthonormalization from the Hankel moment matrix (Cholesky pivots are
// checked against precision exhaustion).
OrthoBasis gram_construct(const WeightKind& w, int n_max, const PrecisionContext& ctx);

// Memoized rho evaluations; quadrature over a fixed weight reuses nodes
// across integrands, so this turns O(polys * nodes) Bessel calls into
// O(nodes).
class RhoCache {
 public:
  Real value(const Real& order, const Real& x, const PrecisionContext& ctx);

 private:
  std::map<std::pair<Real, Real>, Real> map_;
};

// int_0^inf poly(x) x^p rho_a(x) rho_b(x) dx with shared rho memoization.
class PairIntegrator {
 public:
  PairIntegrator(Real a, Real b);
  Real integrate(const Polynomial& poly, long extra_power, const PrecisionContext& ctx);
  Real integrate(const Polynomial& poly, const Real& extra_power, const PrecisionContext& ctx);

 private:
  Real a_, b_;
  RhoCache cache_;
};

// Monomial coefficients of L_r^nu, ascending.
Vec laguerre_coeffs(unsigned r, const Real& nu);

// d_{m,r} = int t^{nu+m} e^{-t} L_m^nu L_r^nu dt, exact termwise gamma route.
Real coeff_d(const Real& nu, unsigned m, unsigned r);
// The published 3F2 form of d_{m,r}; known to disagree in sign at (1,0), so
// the report records the gap instead of failing.
Real coeff_d_hyp(const Real& nu, unsigned m, unsigned r);
VerificationReport coeff_d_report(const Real& nu, unsigned m, unsigned r,
                                  const PrecisionContext& ctx);

// int_0^inf t^{2nu+n+p} e^{-t} U(nu+n+1, 1+nu, t) dt.  The double integral is
// reduced by integrating the t variable first (exact gamma), leaving a single
// quadrature in the Tricomi integration variable; `nested` keeps U inside the
// outer integrand as an independent (slow) oracle.
Real tricomi_weighted_moment(const Real& nu, unsigned n, unsigned p, const PrecisionContext& ctx);
Real tricomi_weighted_moment_nested(const Real& nu, unsigned n, unsigned p,
                                    const PrecisionContext& ctx);

// c_{n,r} = (r! n! (1+nu)_n / Gamma(1+nu+r)) int t^{2nu+n} e^{-t} L_r^nu(t)
//           U(nu+n+1, 1+nu, t) dt.
Real coeff_c(const Real& nu, unsigned n, unsigned r, const PrecisionContext& ctx);

struct CramerSystem {
  Real nu;
  int n{0};
  Mat f;     // f_{k,m}, row k = 0..n, column m = 0..n-1
  Real D;    // D_n
  Vec Dk;    // D_{n,k}, k = 0..n, with D_{n,0} = -D_n
  Real a0;   // free coefficient, sign fixed by a_{n,n} > 0
  Vec coeffs;
  Real condition;  // |D| relative to the largest entry product scale
};
CramerSystem cramer_construct(const Real& nu, int n, const PrecisionContext& ctx);

// Determinant-ratio forms of the recurrence coefficients.
Real recur_A_cramer(const Real& nu, int n, const PrecisionContext& ctx);  // A_{n+1}
Real recur_B_cramer(const Real& nu, int n, const PrecisionContext& ctx);  // B_n

// Four weighted-square integrals of P_n against shifted-order products.
VerificationReport prop6_check(const Real& nu, int n, const PrecisionContext& ctx);

// Composition orthogonality of {P_n} in the Laguerre sense.
VerificationReport theorem1_check(const Real& nu, int n, int m, const PrecisionContext& ctx);

// Rodrigues machinery.
Real rodrigues_h(const Real& nu, int n, int k, const PrecisionContext& ctx);
Real rodrigues_eval(const Real& nu, int n, const Real& x, const PrecisionContext& ctx);
// Pair-decomposed form; also verifies that the rho_{nu+1} coefficient
// aggregate vanishes identically as a polynomial.
Real corollary2_eval(const Real& nu, int n, const Real& x, const PrecisionContext& ctx,
                     Real* b_aggregate_max = nullptr);

struct GeneratingValues {
  Real direct;
  Real rearranged;
  Real difference;
};
GeneratingValues generating_partial(const Real& nu, const Real& x, const Real& z, int N,
                                    const PrecisionContext& ctx);

}  // namespace kortho

#endif

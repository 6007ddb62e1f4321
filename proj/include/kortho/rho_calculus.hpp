#ifndef KORTHO_RHO_CALCULUS_HPP
#define KORTHO_RHO_CALCULUS_HPP

#include "kortho/polynomial.hpp"
#include "kortho/report.hpp"
#include "kortho/special.hpp"

namespace kortho {

// Symbolic element p(x) rho_nu(x) + q(x) rho_{nu+1}(x) with Laurent
// coefficients; closed under d/dx and multiplication by x.
struct RhoPairExpr {
  Real nu;
  LaurentPoly p;
  LaurentPoly q;

  Real eval(const Real& x, const PrecisionContext& ctx) const;
};

// x^j rho_{nu-j} expressed in the (rho_nu, rho_{nu+1}) basis by iterating the
// three-term recurrence; both coefficients are genuine polynomials.
RhoPairExpr reduce_monomial(unsigned j, const Real& nu);
// Same pair from the closed-form coefficient sum (independent route).
RhoPairExpr reduce_monomial_closed(unsigned j, const Real& nu);

RhoPairExpr differentiate(const RhoPairExpr& e);
RhoPairExpr multiply_x(const RhoPairExpr& e);

// d^k/dx^k (x^k rho_nu); asserts the Laurent parts cancel.
RhoPairExpr diff_power(unsigned k, const Real& nu);

// Exact m-th derivative of rho_a * rho_b at x, via the index-lowering rule.
Real rho_product_derivative(const Real& a, const Real& b, unsigned m, const Real& x,
                            const PrecisionContext& ctx);

// Normalized residuals of the third-order equations satisfied by
// u_nu = rho_{nu+1} rho_nu and h_nu = rho_nu^2.
Real ode_residual_u(const Real& nu, const Real& x, const PrecisionContext& ctx);
Real ode_residual_h(const Real& nu, const Real& x, const PrecisionContext& ctx);

// Residuals of the u/h cross-recurrences, including both printed variants of
// the h_{nu+1} identity.
VerificationReport corollary1_check(const Real& nu, const Real& x, const PrecisionContext& ctx);

}  // namespace kortho

#endif

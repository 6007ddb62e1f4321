#ifndef KORTHO_SPECIAL_HPP
#define KORTHO_SPECIAL_HPP

#include "kortho/precision.hpp"
#include "kortho/quadrature.hpp"
#include "kortho/report.hpp"

namespace kortho {

// Weight families built from rho_nu(x) = 2 x^{nu/2} K_nu(2 sqrt x), with an
// optional extra x^alpha factor.
enum class WeightTag {
  Rho,         // rho_nu
  RhoSq,       // rho_nu^2
  RhoProd,     // rho_{nu+1} rho_nu
  RhoSqShift,  // rho_{nu+1}^2
};

struct WeightKind {
  WeightTag tag{WeightTag::RhoSq};
  Real nu{0};
  Real alpha_power{0};
};

// Macdonald function K_nu(z), z > 0, via the cosh integral
// int_0^inf exp(-z cosh t) cosh(nu t) dt.
Real bessel_k(const Real& nu, const Real& z, const PrecisionContext& ctx);

// rho_nu(x) = 2 x^{nu/2} K_nu(2 sqrt x), x > 0.
Real rho(const Real& nu, const Real& x, const PrecisionContext& ctx);

// Generalized Laguerre polynomial L_n^nu(t) by the three-term recurrence.
Real laguerre(unsigned n, const Real& nu, const Real& t);

// Tricomi U(a,b,x) for a > 0, x > 0, from its defining integral.
Real tricomi_u(const Real& a, const Real& b, const Real& x, const PrecisionContext& ctx);

// Upper incomplete gamma Gamma(a,z) = int_z^inf e^{-u} u^{a-1} du, z > 0
// (or z = 0 with a > 0).
Real upper_incomplete_gamma(const Real& a, const Real& z, const PrecisionContext& ctx);

// Terminating 3F2(-k, a2, a3; b1, b2; 1) as an exact finite sum.
Real hyp3f2_terminating(unsigned k, const Real& a2, const Real& a3, const Real& b1,
                        const Real& b2);

// Mellin-Barnes evaluations of rho_nu^2 and rho_{nu+1} rho_nu (the gamma
// quotient contour products); must match the direct products pointwise.
Real mb_rho_squared(const Real& nu, const Real& x, const PrecisionContext& ctx);
Real mb_rho_product(const Real& nu, const Real& x, const PrecisionContext& ctx);

// Hermite-composition kernel int_0^inf exp(-x/t - t^2) dt/t.
Real hermite_kernel(const Real& x, const PrecisionContext& ctx);
// Same kernel via the Gamma^2(s) Gamma(1/2+s) contour product.
Real hermite_kernel_mb(const Real& x, const PrecisionContext& ctx);

// Laguerre integral representation of rho_nu: residual of
// int_0^inf t^{nu+n-1} e^{-t-x/t} L_n^nu(t) dt = (-1)^n x^n rho_nu(x) / n!.
VerificationReport laguerre_rep_check(const Real& nu, unsigned n, const Real& x,
                                      const PrecisionContext& ctx);

// Pointwise value of a WeightKind and the endpoint profile its integrals need.
Real weight_value(const WeightKind& w, const Real& x, const PrecisionContext& ctx);
EndpointProfile weight_profile(const WeightKind& w, const Real& extra_power = Real(0));

}  // namespace kortho

#endif

#ifndef KORTHO_MULTI_HPP
#define KORTHO_MULTI_HPP

#include <array>

#include "kortho/orthopoly.hpp"

namespace kortho {

// Moments of the weight triple (rho_nu^2, rho_{nu+1}^2, rho_{nu+1} rho_nu)
// against x^{alpha + mu}.
std::array<Real, 3> moment_vector(const Real& nu, const Real& alpha, long mu,
                                  const PrecisionContext& ctx);

// Type-1 combination q = A rho_nu^2 + B rho_{nu+1}^2 + C rho_{nu+1} rho_nu
// with deg A = dA, deg B = dB, deg C = dC, orthogonal to x^{alpha+m} for
// m = 0 .. dA+dB+dC+1. The linear system has a one-dimensional kernel; A is
// normalized monic unless its leading coefficient degenerates.
struct Type1Solution {
  Real nu, alpha;
  int dA, dB, dC;
  Polynomial A, B, C;
  Real sv_min, sv_gate;        // smallest retained singular value vs. the gate
  bool fallback_normalization;  // largest-coefficient normalization used

  Real eval(const Real& x, const PrecisionContext& ctx) const;
};

Type1Solution type1_solve(const Real& nu, const Real& alpha, int dA, int dB, int dC,
                          const PrecisionContext& ctx);

// Type-2 monic polynomial p of degree n1+n2+n3 with
//   int p rho_nu^2       x^{alpha+m} dx = 0,  m = 0 .. n1-1,
//   int p rho_{nu+1}^2   x^{alpha+m} dx = 0,  m = 0 .. n2-1,
//   int p rho_{nu+1} rho_nu x^{alpha+m} dx = 0,  m = 0 .. n3-1.
struct Type2Solution {
  Real nu, alpha;
  int n1, n2, n3;
  Polynomial p;
};

Type2Solution type2_solve(const Real& nu, const Real& alpha, int n1, int n2, int n3,
                          const PrecisionContext& ctx);

// Lowering recurrence in alpha for the type-1 triple at multi-index
// (n, n-1, n-1): the candidate built from the level-alpha solution must be
// proportional to the solved level-(alpha-1) triple at (n, n-1, n), and
// d/dx [x^alpha q^alpha] = x^{alpha-1} q^{alpha-1} pointwise.
VerificationReport theorem5_check(const Real& nu, const Real& alpha, int n,
                                  const PrecisionContext& ctx);

// d/dx p^alpha_{(n+1,n,n+1)} = (3n+2) p^{alpha+1}_{(n+1,n,n)}.
VerificationReport theorem6_check(const Real& nu, const Real& alpha, int n,
                                  const PrecisionContext& ctx);

// Smallest eigenvalue of the Gram matrix of
// {x^i rho_nu^2} u {x^j rho_{nu+1}^2} u {x^k rho_{nu+1} rho_nu}
// under x dx (degrees i <= n, j <= m, k <= l); positivity certifies linear
// independence of the system.
VerificationReport theorem4_rank_check(const Real& nu, int n, int m, int l,
                                       const PrecisionContext& ctx);

// rho_{1/2}^2(x) = x rho_{-1/2}^2(x) pointwise.
VerificationReport remark3_check(const std::vector<Real>& xs, const PrecisionContext& ctx);

// Independent quadrature replay of the defining orthogonality conditions.
VerificationReport type1_residual_check(const Type1Solution& s, const PrecisionContext& ctx);
VerificationReport type2_residual_check(const Type2Solution& s, const PrecisionContext& ctx);

}  // namespace kortho

#endif

#ifndef KORTHO_COMPOSITION_HPP
#define KORTHO_COMPOSITION_HPP

#include "kortho/orthopoly.hpp"

namespace kortho {

// psi(x) = sum of coeff * x^alpha terms, alpha > -1; the induced
// phi(t) = (1/t) int_0^inf e^{-x/t} psi(x) dx = sum coeff Gamma(alpha+1) t^alpha.
struct PowerTerm {
  Real coeff;
  Real alpha;
};

struct LaplacePair {
  std::vector<PowerTerm> psi;

  static LaplacePair power(const Real& alpha, const Real& coeff = Real(1)) {
    return LaplacePair{{{coeff, alpha}}};
  }
  Real psi_eval(const Real& x) const;
  Real min_alpha() const;
};

enum class MeasureTag { Laguerre, Hermite, Jacobi };

struct MeasureKind {
  MeasureTag tag{MeasureTag::Laguerre};
  Real nu{0};     // Laguerre parameter
  Real alpha{0};  // Jacobi (1-t)^alpha
  Real beta{1};   // Jacobi t^beta, beta > 0
};

// theta^k{phi}(t) for theta = t D t, in closed form for power kinds.
Real theta_power_apply(unsigned k, const LaplacePair& pair, const Real& t,
                       const PrecisionContext& ctx);

// Omega(x) = int e^{-x/t} omega(t) dt/t for the three measures.
Real omega_kernel(const MeasureKind& m, const Real& x, const PrecisionContext& ctx);

// Quadrature on both sides of the composition identity
//   int p(theta)q(theta){phi} omega dt = int p q psi Omega dx.
VerificationReport verify_identity(const MeasureKind& m, const LaplacePair& pair,
                                   const Polynomial& p, const Polynomial& q,
                                   const PrecisionContext& ctx);

// Orthonormal sequence for x^alpha rho_nu(x) checked through the
// Laguerre-measure composition integral.
VerificationReport prudnikov_check(const Real& nu, const Real& alpha, int n, int m,
                                   const PrecisionContext& ctx);

}  // namespace kortho

#endif

#ifndef KORTHO_QUADRATURE_HPP
#define KORTHO_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "kortho/precision.hpp"

namespace kortho {

enum class DecayClass {
  ExpLinear,     // ~ exp(-c x)
  ExpSqrt,       // ~ exp(-c sqrt(x)); pre-mapped by x = u^2
  ExpQuadratic,  // ~ exp(-c x^2)
  Power,         // algebraic decay (integrable)
};

// Endpoint behavior of a semi-infinite integrand: x^sing_exp_at_zero as
// x -> 0+ (optionally with a log factor) and the stated decay at infinity.
struct EndpointProfile {
  Real sing_exp_at_zero{0};
  bool log_factor_at_zero{false};
  DecayClass decay{DecayClass::ExpLinear};
  // Converge on err <= quad_target * |value| instead of
  // err <= quad_target * max(1, |value|); for integrals whose (nonzero)
  // values feed into further integrands that amplify absolute error.
  bool relative_target{false};
};

struct QuadResult {
  Real value{0};
  Real err_estimate{0};
  int levels_used{0};
  bool converged{false};
};

using Integrand = std::function<Real(const Real&)>;

// Double-exponential (exp-sinh) quadrature of f over (0, inf).
// Throws non_convergence_error if the level cap is reached before
// err_estimate <= quad_target * max(1, |value|).
QuadResult integrate_zero_inf(const Integrand& f, const EndpointProfile& profile,
                              const PrecisionContext& ctx);

// tanh-sinh quadrature of g(x) * (x-a)^sing_a * (b-x)^sing_b over [a, b].
// The singular endpoint factors are evaluated from the exact node-to-endpoint
// distances, so sing_a, sing_b may approach -1 safely.
QuadResult integrate_finite(const Integrand& g, const Real& a, const Real& b,
                            const Real& sing_a, const Real& sing_b,
                            const PrecisionContext& ctx);

// Product of gamma factors prod Gamma(s + a_i) / prod Gamma(s + b_j) on a
// vertical contour.
struct GammaProductSpec {
  std::vector<Real> num_shifts;
  std::vector<Real> den_shifts;
};

struct MellinResult {
  Real value{0};
  Real imag_residual{0};  // |Im| of the raw complex sum; conjugate symmetry check
  Real err_estimate{0};
  int levels_used{0};
};

// (1/2 pi i) int_{gamma - i inf}^{gamma + i inf} spec(s) x^{-s} ds for x > 0,
// with the contour strictly right of every numerator pole.
MellinResult mellin_line_integral(const GammaProductSpec& spec, const Real& gamma_line,
                                  const Real& x, const PrecisionContext& ctx);

}  // namespace kortho

#endif

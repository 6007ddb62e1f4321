#ifndef KORTHO_GAMMAFN_HPP
#define KORTHO_GAMMAFN_HPP

#include "kortho/precision.hpp"

namespace kortho {

// Gamma function for real argument, full working precision.
// Throws pole_error at non-positive integers.
Real gamma(const Real& x);

// ln Gamma for real x > 0.
Real log_gamma(const Real& x);

// Pochhammer symbol (a)_n as a direct product.
Real pochhammer(const Real& a, unsigned n);

// Euler beta, a > 0, b > 0.
Real beta(const Real& a, const Real& b);

// Principal branch of ln Gamma(s). Argument-shifted Stirling series;
// relative accuracy within 2^(8-bits) for Re s > 0 (the Mellin contours
// used here always satisfy that) and away from the real-axis poles.
Complex log_gamma_complex(const Complex& s, const PrecisionContext& ctx);

}  // namespace kortho

#endif

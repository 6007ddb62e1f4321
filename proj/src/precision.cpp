#include "kortho/precision.hpp"

#include <cmath>

namespace kortho {

void set_working_bits(unsigned bits) {
  // boost's mpfr front end takes decimal digits; round up so the mantissa
  // carries at least `bits` binary digits.
  unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
  Real::default_precision(digits10);
}

PrecisionContext PrecisionContext::make(unsigned bits, const std::string& verify_tol,
                                        const std::string& quad_target) {
  if (bits < 64) throw std::invalid_argument("PrecisionContext: bits must be >= 64");
  set_working_bits(bits);
  PrecisionContext ctx;
  ctx.bits = bits;
  ctx.verify_tol = Real(verify_tol);
  ctx.quad_target = Real(quad_target);
  if (!(ctx.quad_target > 0 && ctx.quad_target <= ctx.verify_tol && ctx.verify_tol < 1))
    throw std::invalid_argument("PrecisionContext: need 0 < quad_target <= verify_tol < 1");
  return ctx;
}

Real PrecisionContext::eps() const {
  return boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits));
}

Real const_pi() {
  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi;
}

Real const_euler() {
  Real g;
  mpfr_const_euler(g.backend().data(), MPFR_RNDN);
  return g;
}

Real abs(const Complex& z) {
  return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

Complex log(const Complex& z) {
  using boost::multiprecision::atan2;
  using boost::multiprecision::log;
  return {log(abs(z)), atan2(z.im, z.re)};
}

Complex exp(const Complex& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::exp;
  using boost::multiprecision::sin;
  Real r = exp(z.re);
  return {r * cos(z.im), r * sin(z.im)};
}

Complex pow(const Real& x, const Complex& z) {
  if (!(x > 0)) throw std::domain_error("pow: base must be positive");
  Real lx = boost::multiprecision::log(x);
  return exp(Complex(z.re * lx, z.im * lx));
}

}  // namespace kortho

#ifndef KORTHO_PRECISION_HPP
#define KORTHO_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace kortho {

// Arbitrary-precision real scalar. Expression templates are kept off so the
// type plays well with Eigen's generic dense algorithms.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct non_convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Working precision plus the two tolerances every check threads through:
// verify_tol gates pass/fail of identity reports, quad_target is the
// (stricter) truncation target for quadrature.
struct PrecisionContext {
  unsigned bits;
  Real verify_tol;
  Real quad_target;

  static PrecisionContext make(unsigned bits = 320,
                               const std::string& verify_tol = "1e-25",
                               const std::string& quad_target = "1e-40");

  // 2^-bits
  Real eps() const;
};

// Installs `bits` as the default mpfr mantissa precision for newly created
// Reals. PrecisionContext::make calls this; exposed for tests.
void set_working_bits(unsigned bits);

inline Real abs(const Real& x) { return boost::multiprecision::abs(x); }

// Minimal complex arithmetic over Real; std::complex is not specified for
// user-defined floating types.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) {
    return {a * b.re, a * b.im};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

// pi at the current working precision (recomputed per call; never cached
// across precision changes).
Real const_pi();
Real const_euler();

Real abs(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex exp(const Complex& z);
// x^z for real x > 0
Complex pow(const Real& x, const Complex& z);

}  // namespace kortho

#endif

#ifndef KORTHO_POLYNOMIAL_HPP
#define KORTHO_POLYNOMIAL_HPP

#include <Eigen/Dense>
#include <map>

#include "kortho/precision.hpp"

namespace kortho {

using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

// Dense univariate polynomial, coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() : c_(Vec::Zero(1)) {}
  explicit Polynomial(Vec coeffs);
  static Polynomial monomial(int degree, const Real& coeff = Real(1));

  int degree() const;  // -1 for the zero polynomial
  const Vec& coeffs() const { return c_; }
  Real coeff(int k) const;  // 0 beyond the stored range

  Real eval(const Real& x) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Real& s) const;

  Real max_abs_coeff() const;

 private:
  void trim();
  Vec c_;
};

// Sparse Laurent polynomial: exponent -> coefficient, zero entries dropped.
using LaurentPoly = std::map<long, Real>;

Real laurent_eval(const LaurentPoly& p, const Real& x);
LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_scale(const LaurentPoly& a, const Real& s);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_shift(const LaurentPoly& a, long k);  // multiply by x^k
LaurentPoly laurent_derivative(const LaurentPoly& a);
bool laurent_is_polynomial(const LaurentPoly& a);
Polynomial laurent_to_polynomial(const LaurentPoly& a);
LaurentPoly to_laurent(const Polynomial& p);

}  // namespace kortho

#endif

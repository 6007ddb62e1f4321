#include "kortho/polynomial.hpp"

namespace kortho {

Polynomial::Polynomial(Vec coeffs) : c_(std::move(coeffs)) {
  if (c_.size() == 0) c_ = Vec::Zero(1);
  trim();
}

Polynomial Polynomial::monomial(int degree, const Real& coeff) {
  Vec c = Vec::Zero(degree + 1);
  c(degree) = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  Eigen::Index n = c_.size();
  while (n > 1 && c_(n - 1) == 0) --n;
  c_.conservativeResize(n);
}

int Polynomial::degree() const {
  if (c_.size() == 1 && c_(0) == 0) return -1;
  return static_cast<int>(c_.size()) - 1;
}

Real Polynomial::coeff(int k) const {
  if (k < 0 || k >= c_.size()) return Real(0);
  return c_(k);
}

Real Polynomial::eval(const Real& x) const {
  Real v = 0;
  for (Eigen::Index i = c_.size() - 1; i >= 0; --i) v = v * x + c_(i);
  return v;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  Vec d(c_.size() - 1);
  for (Eigen::Index i = 1; i < c_.size(); ++i) d(i - 1) = c_(i) * Real(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Vec r = Vec::Zero((std::max)(c_.size(), o.c_.size()));
  r.head(c_.size()) = c_;
  r.head(o.c_.size()) += o.c_;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o * Real(-1);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Vec r = Vec::Zero(c_.size() + o.c_.size() - 1);
  for (Eigen::Index i = 0; i < c_.size(); ++i)
    for (Eigen::Index j = 0; j < o.c_.size(); ++j) r(i + j) += c_(i) * o.c_(j);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Real& s) const {
  return Polynomial(Vec(c_ * s));
}

Real Polynomial::max_abs_coeff() const {
  Real m = 0;
  for (Eigen::Index i = 0; i < c_.size(); ++i) m = (std::max)(m, abs(c_(i)));
  return m;
}

Real laurent_eval(const LaurentPoly& p, const Real& x) {
  Real v = 0;
  for (const auto& [k, c] : p) {
    if (k >= 0) {
      v += c * pow(x, static_cast<unsigned long>(k));
    } else {
      v += c / pow(x, static_cast<unsigned long>(-k));
    }
  }
  return v;
}

static void laurent_accumulate(LaurentPoly& out, long k, const Real& c) {
  auto [it, fresh] = out.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  } else if (c == 0) {
    out.erase(it);
  }
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b) laurent_accumulate(r, k, c);
  return r;
}

LaurentPoly laurent_scale(const LaurentPoly& a, const Real& s) {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [k, c] : a) r.emplace(k, c * s);
  return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) laurent_accumulate(r, ka + kb, ca * cb);
  return r;
}

LaurentPoly laurent_shift(const LaurentPoly& a, long k) {
  LaurentPoly r;
  for (const auto& [j, c] : a) r.emplace(j + k, c);
  return r;
}

LaurentPoly laurent_derivative(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [k, c] : a)
    if (k != 0) r.emplace(k - 1, c * Real(k));
  return r;
}

bool laurent_is_polynomial(const LaurentPoly& a) {
  return a.empty() || a.begin()->first >= 0;
}

Polynomial laurent_to_polynomial(const LaurentPoly& a) {
  if (!laurent_is_polynomial(a)) throw std::domain_error("laurent_to_polynomial: negative power");
  if (a.empty()) return Polynomial();
  Vec c = Vec::Zero(a.rbegin()->first + 1);
  for (const auto& [k, v] : a) c(k) = v;
  return Polynomial(std::move(c));
}

LaurentPoly to_laurent(const Polynomial& p) {
  LaurentPoly r;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) r.emplace(k, p.coeff(k));
  return r;
}

}  // namespace kortho

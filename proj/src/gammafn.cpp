#include "kortho/gammafn.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <vector>

namespace kortho {

namespace mp = boost::multiprecision;

// Bernoulli numbers kept as exact rationals so cached values stay valid
// across precision changes. B_{2k} via the defining recurrence
// sum_{j<=m} C(m+1,j) B_j = 0.
static Real bernoulli_2k(unsigned k) {
  using Rat = mp::mpq_rational;
  using Int = mp::mpz_int;
  static std::vector<Rat> table = {Rat(1), Rat(1, 6)};  // B_0, B_2
  while (table.size() <= k) {
    unsigned m = 2 * static_cast<unsigned>(table.size());  // computing B_m, m even
    Rat acc(0);
    // odd-index Bernoulli numbers vanish except B_1 = -1/2
    Int c = 1;  // C(m+1, j) built incrementally
    for (unsigned j = 0; j < m; ++j) {
      if (j % 2 == 0)
        acc += Rat(c) * table[j / 2];
      else if (j == 1)
        acc += Rat(c) * Rat(-1, 2);
      c = c * Int(m + 1 - j) / Int(j + 1);
    }
    table.push_back(-acc / Rat(c));
  }
  return Real(table[k]);
}

static bool is_nonpositive_integer(const Real& x) {
  return x <= 0 && x == mp::floor(x);
}

Real gamma(const Real& x) {
  if (is_nonpositive_integer(x)) throw pole_error("gamma: pole at non-positive integer");
  return mp::tgamma(x);
}

Real log_gamma(const Real& x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: requires x > 0");
  return mp::lgamma(x);
}

Real pochhammer(const Real& a, unsigned n) {
  Real p = 1;
  for (unsigned k = 0; k < n; ++k) p *= a + Real(k);
  return p;
}

Real beta(const Real& a, const Real& b) {
  if (!(a > 0 && b > 0)) throw std::domain_error("beta: requires a, b > 0");
  return mp::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

// Stirling series tail sum_{k>=1} B_{2k} / (2k(2k-1) z^(2k-1)), with z shifted
// far enough right that the series reaches the target before its terms turn.
static Complex stirling_tail(const Complex& z, const Real& target) {
  Complex inv = Complex(Real(1)) / z;
  Complex inv2 = inv * inv;
  Complex zpow = inv;
  Complex sum{Real(0)};
  Real prev_mag = -1;
  for (unsigned k = 1; k < 4000; ++k) {
    Real b2k = bernoulli_2k(k);
    Complex term = (b2k / (Real(2 * k) * Real(2 * k - 1))) * zpow;
    sum = sum + term;
    Real mag = abs(term);
    if (mag < target) return sum;
    if (prev_mag >= 0 && mag > prev_mag) break;  // divergent tail, need larger shift
    prev_mag = mag;
    zpow = zpow * inv2;
  }
  throw non_convergence_error("log_gamma_complex: Stirling series did not converge");
}

Complex log_gamma_complex(const Complex& s, const PrecisionContext& ctx) {
  if (s.im == 0 && is_nonpositive_integer(s.re))
    throw pole_error("log_gamma_complex: pole at non-positive integer");

  // ln Gamma(s) = ln Gamma(s+m) - sum_{j<m} ln(s+j); shift until the Stirling
  // series at s+m meets the target. Retry with a larger shift on failure.
  Real target = mp::ldexp(Real(1), -static_cast<int>(ctx.bits) - 16);
  Real radius = (std::max)(Real(20), Real(ctx.bits) * Real("0.30"));
  for (int attempt = 0; attempt < 6; ++attempt, radius *= 2) {
    unsigned m = 0;
    if (s.re < radius) {
      Real need = radius - s.re;
      m = static_cast<unsigned>(need) + 1;
    }
    Complex z(s.re + Real(m), s.im);
    Complex tail;
    try {
      tail = stirling_tail(z, target);
    } catch (const non_convergence_error&) {
      continue;
    }
    Real half_log_2pi = mp::log(2 * const_pi()) / 2;
    Complex lg = (z - Complex(Real("0.5"))) * log(z) - z + Complex(half_log_2pi) + tail;
    for (unsigned j = 0; j < m; ++j) lg = lg - log(Complex(s.re + Real(j), s.im));
    return lg;
  }
  throw non_convergence_error("log_gamma_complex: failed at all shifts");
}

}  // namespace kortho

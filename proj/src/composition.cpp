#include "kortho/composition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "kortho/gammafn.hpp"
#include "kortho/special.hpp"

namespace kortho {

Real LaplacePair::psi_eval(const Real& x) const {
  Real v = 0;
  for (const auto& term : psi) v += term.coeff * exp(term.alpha * log(x));
  return v;
}

Real LaplacePair::min_alpha() const {
  Real m = psi.front().alpha;
  for (const auto& term : psi) m = (std::min)(m, term.alpha);
  return m;
}

Real theta_power_apply(unsigned k, const LaplacePair& pair, const Real& t,
                       const PrecisionContext&) {
  Real v = 0;
  for (const auto& term : pair.psi)
    v += term.coeff * gamma(term.alpha + Real(k + 1)) * exp((term.alpha + k) * log(t));
  return v;
}

static Real rho_edge(const Real& nu) { return (nu - abs(nu)) / 2; }

namespace {

// Outer quadrature nodes recur across identity checks over the same measure,
// so the per-node kernels (each a quadrature of its own) are memoized.
using KernelKey = std::tuple<int, Real, Real, Real, Real>;
std::map<KernelKey, Real>& kernel_cache() {
  static std::map<KernelKey, Real> cache;
  return cache;
}
std::mutex& kernel_mutex() {
  static std::mutex m;
  return m;
}

Real jacobi_omega(const Real& alpha, const Real& beta, const Real& x,
                  const PrecisionContext& ctx) {
  if (x < 1) {
    // Direct form int_0^1 (1-t)^alpha t^{beta-1} e^{-x/t} dt; the exponential
    // controls the t -> 0 endpoint regardless of beta.
    Integrand g = [&](const Real& t) { return exp(-x / t); };
    return integrate_finite(g, Real(0), Real(1), beta - 1, alpha, ctx).value;
  }
  return gamma(1 + alpha) * exp(-x) * tricomi_u(1 + alpha, 1 - beta, x, ctx);
}

Real cached_kernel(const MeasureKind& m, const Real& x, const PrecisionContext& ctx) {
  KernelKey key{static_cast<int>(m.tag), m.nu, m.alpha, m.beta, x};
  {
    std::lock_guard<std::mutex> lock(kernel_mutex());
    auto it = kernel_cache().find(key);
    if (it != kernel_cache().end()) return it->second;
  }
  Real v = omega_kernel(m, x, ctx);
  std::lock_guard<std::mutex> lock(kernel_mutex());
  kernel_cache().emplace(key, v);
  return v;
}

}  // namespace

Real omega_kernel(const MeasureKind& m, const Real& x, const PrecisionContext& ctx) {
  switch (m.tag) {
    case MeasureTag::Laguerre:
      return rho(m.nu, x, ctx);
    case MeasureTag::Hermite:
      return hermite_kernel(x, ctx);
    case MeasureTag::Jacobi:
      return jacobi_omega(m.alpha, m.beta, x, ctx);
  }
  return 0;
}

VerificationReport verify_identity(const MeasureKind& m, const LaplacePair& pair,
                                   const Polynomial& p, const Polynomial& q,
                                   const PrecisionContext& ctx) {
  Polynomial e = p * q;
  const Real amin = pair.min_alpha();
  Real lhs = 0, rhs = 0;
  std::string eq;

  switch (m.tag) {
    case MeasureTag::Laguerre: {
      eq = "2.8";
      EndpointProfile lp;
      lp.sing_exp_at_zero = m.nu + amin;
      lp.decay = DecayClass::ExpLinear;
      Integrand lf = [&](const Real& t) {
        Real s = 0;
        for (int j = 0; j <= e.degree(); ++j)
          if (e.coeff(j) != 0) s += e.coeff(j) * theta_power_apply(unsigned(j), pair, t, ctx);
        return s * exp(m.nu * log(t)) * exp(-t);
      };
      lhs = integrate_zero_inf(lf, lp, ctx).value;

      EndpointProfile rp = weight_profile(WeightKind{WeightTag::Rho, m.nu, Real(0)});
      rp.sing_exp_at_zero += amin;
      Integrand rf = [&](const Real& x) {
        return e.eval(x) * pair.psi_eval(x) * cached_kernel(m, x, ctx);
      };
      rhs = integrate_zero_inf(rf, rp, ctx).value;
      break;
    }
    case MeasureTag::Hermite: {
      eq = "2.15";
      EndpointProfile lp;
      lp.sing_exp_at_zero = amin;
      lp.decay = DecayClass::ExpQuadratic;
      Integrand lf = [&](const Real& t) {
        Real s = 0;
        for (int j = 0; j <= e.degree(); ++j)
          if (j % 2 == 0 && e.coeff(j) != 0)
            s += 2 * e.coeff(j) * theta_power_apply(unsigned(j), pair, t, ctx);
        return s * exp(-t * t);
      };
      lhs = integrate_zero_inf(lf, lp, ctx).value;

      EndpointProfile rp;
      rp.sing_exp_at_zero = amin;
      rp.log_factor_at_zero = true;  // kernel ~ -log x near 0
      rp.decay = DecayClass::ExpSqrt;
      // Outside this window the integrand is below ~1e-48 (kernel decays like
      // exp(-3 (x/2)^{2/3}); near zero it only grows logarithmically), and the
      // kernel quadrature cannot resolve such extreme arguments anyway.
      const Real xlo = exp(Real(-115) / (1 + amin)), xhi = Real(50000);
      Integrand rf = [&](const Real& x) {
        if (x < xlo || x > xhi) return Real(0);
        Real even = 0;
        for (int j = 0; j <= e.degree(); ++j)
          if (j % 2 == 0) even += 2 * e.coeff(j) * pow(x, static_cast<unsigned long>(j));
        return even * pair.psi_eval(x) * cached_kernel(m, x, ctx);
      };
      rhs = integrate_zero_inf(rf, rp, ctx).value;
      break;
    }
    case MeasureTag::Jacobi: {
      eq = "2.19";
      // Flatten sum_j e_j theta^j{phi}(t) into (coef, exponent) pairs and pull
      // t^{beta + amin} (1-t)^alpha out as the endpoint factors.
      std::vector<std::pair<Real, Real>> flat;
      for (int j = 0; j <= e.degree(); ++j)
        if (e.coeff(j) != 0)
          for (const auto& term : pair.psi)
            flat.emplace_back(e.coeff(j) * term.coeff * gamma(term.alpha + Real(j + 1)),
                              term.alpha + j - amin);
      Integrand lg = [&](const Real& t) {
        Real s = 0;
        for (const auto& [c, a] : flat) s += c * (a == 0 ? Real(1) : exp(a * log(t)));
        return s;
      };
      lhs = integrate_finite(lg, Real(0), Real(1), m.beta + amin, m.alpha, ctx).value;

      EndpointProfile rp;
      rp.sing_exp_at_zero = amin;
      rp.decay = DecayClass::ExpLinear;
      // Omega decays like e^{-x} and is bounded at 0, so this window keeps
      // the truncated mass far below the quadrature target.
      const Real xlo = exp(Real(-115) / (1 + amin)), xhi = Real(600);
      Integrand rf = [&](const Real& x) {
        if (x < xlo || x > xhi) return Real(0);
        return e.eval(x) * pair.psi_eval(x) * cached_kernel(m, x, ctx);
      };
      rhs = integrate_zero_inf(rf, rp, ctx).value;
      break;
    }
  }

  return make_report("composition_identity", eq, rhs, lhs, ctx.verify_tol);
}

VerificationReport prudnikov_check(const Real& nu, const Real& alpha, int n, int m,
                                   const PrecisionContext& ctx) {
  OrthoBasis basis =
      gram_construct(WeightKind{WeightTag::Rho, nu, alpha}, (std::max)(n, m), ctx);
  Polynomial e = basis.poly(n) * basis.poly(m);
  EndpointProfile prof;
  prof.sing_exp_at_zero = nu + alpha;
  prof.decay = DecayClass::ExpLinear;
  Integrand f = [&](const Real& t) {
    Real s = 0;
    for (int j = 0; j <= e.degree(); ++j)
      if (e.coeff(j) != 0)
        s += e.coeff(j) * gamma(alpha + Real(j + 1)) * exp((alpha + j) * log(t));
    return s * exp(nu * log(t)) * exp(-t);
  };
  Real lhs = integrate_zero_inf(f, prof, ctx).value;
  Real expected = (n == m) ? Real(1) : Real(0);
  return make_report("prudnikov_orthonormality", "2.9", lhs, expected, ctx.verify_tol);
}

}  // namespace kortho

#include "kortho/special.hpp"

#include "kortho/gammafn.hpp"

namespace kortho {

namespace mp = boost::multiprecision;

namespace {

// (z/2)^mu sum_k (z^2/4)^k / (k! Gamma(mu+k+1)); all terms positive, so no
// cancellation for the small arguments this is used with.
Real bessel_i_series(const Real& mu, const Real& z, const Real& tiny) {
  Real q = z * z / 4;
  Real term = 1 / gamma(mu + 1);
  Real sum = term;
  for (unsigned k = 1;; ++k) {
    term *= q / (k * (mu + k));
    sum += term;
    if (abs(term) < abs(sum) * tiny) break;
  }
  return mp::exp(mu * mp::log(z / 2)) * sum;
}

// Ascending series for K_n at exact integer order n >= 0.
Real bessel_k_integer_series(unsigned n, const Real& z, const Real& tiny) {
  Real q = z * z / 4, lz = mp::log(z / 2);
  Real finite = 0;
  if (n > 0) {
    Real term = gamma(Real(n));  // k = 0: (n-1)!
    finite = term;
    for (unsigned k = 1; k < n; ++k) {
      term *= -q / (k * Real(n - k));
      finite += term;
    }
    finite *= mp::exp(-Real(n) * lz) / 2;
  }
  Real in = bessel_i_series(Real(n), z, tiny);
  Real sign = (n % 2 == 0) ? Real(1) : Real(-1);
  Real g = const_euler();
  Real psa = -g, psb = -g;  // psi(1), psi(n+1)
  for (unsigned j = 1; j <= n; ++j) psb += Real(1) / j;
  Real term = 1 / gamma(Real(n + 1));  // k = 0: 1/(0! n!)
  Real s = (psa + psb) * term;
  for (unsigned k = 1;; ++k) {
    term *= q / (k * Real(n + k));
    psa += Real(1) / k;
    psb += Real(1) / (n + k);
    Real t = (psa + psb) * term;
    s += t;
    if (abs(t) < abs(s) * tiny) break;
  }
  return finite - sign * lz * in + sign * mp::exp(Real(n) * lz) / 2 * s;
}

}  // namespace

Real bessel_k(const Real& nu, const Real& z, const PrecisionContext& ctx) {
  if (!(z > 0)) throw std::domain_error("bessel_k: requires z > 0");
  Real anu = abs(nu);  // K_{-nu} = K_nu
  if (z < 1) {
    // The cosh-integral integrand plateaus out to t ~ |log z| for small z,
    // which makes trapezoid refinement O(|log z| 2^levels); the ascending
    // series costs a few dozen terms instead. Quadrature-grid tails reach
    // z ~ exp(-1500), so this branch is load-bearing, not an optimization.
    const Real tiny = mp::ldexp(Real(1), -static_cast<int>(ctx.bits) - 16);
    Real nearest = mp::floor(anu + Real("0.5"));
    if (anu == nearest)
      return bessel_k_integer_series(static_cast<unsigned>(nearest), z, tiny);
    // pi/2 (I_{-nu} - I_nu) / sin(pi nu); fine away from integer orders
    // (grids here keep |nu - nearest integer| >= 0.25)
    return const_pi() / (2 * mp::sin(const_pi() * anu)) *
           (bessel_i_series(-anu, z, tiny) - bessel_i_series(anu, z, tiny));
  }
  // int_0^inf exp(-z cosh t) cosh(nu t) dt, with cosh(nu t) folded into the
  // exponent so extreme nodes underflow cleanly instead of producing 0 * inf.
  // For large z the integrand is a spike of width 1/sqrt(z) at t = 0, so
  // integrate in u = sqrt(z) t there (width becomes O(1)); z cosh t is
  // evaluated as z + 2 z sinh^2(t/2), which is exact where cosh t - 1 would
  // cancel catastrophically.
  const Real sz = (z > 4) ? mp::sqrt(z) : Real(1);
  auto f = [&](const Real& u) {
    Real t = u / sz;
    Real sh = mp::sinh(t / 2);
    Real e = anu * t - z - 2 * z * sh * sh;
    return mp::exp(e) * (1 + mp::exp(-2 * anu * t)) / (2 * sz);
  };
  // The integrand is entire and decays (at least) like a gaussian, so the
  // plain trapezoid rule on the even extension converges geometrically.
  // Inner-integral headroom: callers integrate over many K evaluations and
  // their own convergence test cannot distinguish quadrature error from a
  // systematic plateau at the shared target, so aim ten digits deeper here.
  const Real target = ctx.quad_target * Real("1e-10");
  Real cutoff = target * Real("1e-6");
  auto tail = [&](const Real& h, int stride, int first) {
    Real s = 0, peak = 0;
    for (int k = first;; k += stride) {
      Real term = f(k * h);
      s += term;
      if (term > peak) peak = term;
      if (term <= cutoff * peak && k * h > 1) break;  // also stops full underflow (peak 0)
    }
    return s;
  };
  Real h = 1;
  Real value = h * (f(Real(0)) / 2 + tail(h, 1, 1));
  for (int level = 1; level <= 14; ++level) {
    h /= 2;
    Real refined = value / 2 + h * tail(h, 2, 1);
    Real err = abs(refined - value);
    value = refined;
    // Relative target: K_nu values are routinely far below 1 and downstream
    // integrands multiply them by large powers of the argument.
    if (level >= 3 && err <= target * abs(value)) return value;
  }
  throw non_convergence_error("bessel_k: trapezoid refinement stalled");
}

Real rho(const Real& nu, const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw std::domain_error("rho: requires x > 0");
  Real sx = mp::sqrt(x);
  return 2 * mp::exp(nu / 2 * mp::log(x)) * bessel_k(nu, 2 * sx, ctx);
}

Real laguerre(unsigned n, const Real& nu, const Real& t) {
  if (n == 0) return Real(1);
  Real lm1 = 1;
  Real l = 1 + nu - t;
  for (unsigned k = 1; k < n; ++k) {
    Real next = ((2 * Real(k) + 1 + nu - t) * l - (Real(k) + nu) * lm1) / Real(k + 1);
    lm1 = l;
    l = next;
  }
  return l;
}

Real tricomi_u(const Real& a, const Real& b, const Real& x, const PrecisionContext& ctx) {
  if (!(a > 0)) throw std::domain_error("tricomi_u: requires a > 0");
  if (!(x > 0)) throw std::domain_error("tricomi_u: requires x > 0");
  // U(a,b,x) = (1/Gamma(a)) int_0^inf t^{a-1} (1+t)^{b-a-1} e^{-xt} dt
  Real c = b - a - 1;
  Integrand f = [&](const Real& t) {
    return mp::exp((a - 1) * mp::log(t) + c * mp::log1p(t) - x * t);
  };
  EndpointProfile p;
  p.sing_exp_at_zero = a - 1;
  QuadResult q = integrate_zero_inf(f, p, ctx);
  return q.value / gamma(a);
}

Real upper_incomplete_gamma(const Real& a, const Real& z, const PrecisionContext& ctx) {
  if (z == 0) {
    if (!(a > 0)) throw std::domain_error("upper_incomplete_gamma: divergent at z = 0, a <= 0");
    return gamma(a);
  }
  if (!(z > 0)) throw std::domain_error("upper_incomplete_gamma: requires z >= 0");
  // Gamma(a,z) = e^{-z} int_0^inf e^{-v} (v+z)^{a-1} dv
  Integrand f = [&](const Real& v) { return mp::exp(-v + (a - 1) * mp::log(v + z)); };
  return mp::exp(-z) * integrate_zero_inf(f, {}, ctx).value;
}

Real hyp3f2_terminating(unsigned k, const Real& a2, const Real& a3, const Real& b1,
                        const Real& b2) {
  Real sum = 0;
  Real term = 1;
  for (unsigned i = 0; i <= k; ++i) {
    sum += term;
    if (i == k) break;
    Real d1 = b1 + Real(i), d2 = b2 + Real(i);
    if (d1 == 0 || d2 == 0)
      throw pole_error("hyp3f2_terminating: lower parameter hits a non-positive integer");
    term *= (Real(i) - Real(k)) * (a2 + Real(i)) * (a3 + Real(i)) / (d1 * d2 * Real(i + 1));
  }
  return sum;
}

// rho_nu^2 (x) = 2 sqrt(pi) 4^{-nu} M^{-1}[G(s+2nu)G(s+nu)G(s)/G(s+nu+1/2)](4x)
Real mb_rho_squared(const Real& nu, const Real& x, const PrecisionContext& ctx) {
  GammaProductSpec spec;
  spec.num_shifts = {2 * nu, nu, Real(0)};
  spec.den_shifts = {nu + Real("0.5")};
  Real gl = (std::max)({Real(0), -nu, -2 * nu}) + 1;
  MellinResult m = mellin_line_integral(spec, gl, 4 * x, ctx);
  return 2 * mp::sqrt(const_pi()) * mp::exp(-nu * mp::log(Real(4))) * m.value;
}

// rho_{nu+1} rho_nu (x) = sqrt(pi) 4^{-nu} M^{-1}[G(s+2nu+1)G(s+nu)G(s)/G(s+nu+1/2)](4x)
Real mb_rho_product(const Real& nu, const Real& x, const PrecisionContext& ctx) {
  GammaProductSpec spec;
  spec.num_shifts = {2 * nu + 1, nu, Real(0)};
  spec.den_shifts = {nu + Real("0.5")};
  Real gl = (std::max)({Real(0), -nu, -2 * nu - 1}) + 1;
  MellinResult m = mellin_line_integral(spec, gl, 4 * x, ctx);
  return mp::sqrt(const_pi()) * mp::exp(-nu * mp::log(Real(4))) * m.value;
}

Real hermite_kernel(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw std::domain_error("hermite_kernel: requires x > 0");
  // exp(-x/t) flattens the 1/t endpoint; gaussian decay at infinity
  Integrand f = [&](const Real& t) { return mp::exp(-x / t - t * t) / t; };
  EndpointProfile p;
  p.decay = DecayClass::ExpQuadratic;
  p.relative_target = true;  // values get multiplied by powers of x downstream
  PrecisionContext inner = ctx;
  inner.quad_target *= Real("1e-10");  // headroom below the caller's target
  return integrate_zero_inf(f, p, inner).value;
}

Real hermite_kernel_mb(const Real& x, const PrecisionContext& ctx) {
  // (1/(2 sqrt pi)) rho_{1/2,2}(x^2/4), the Gamma^2(s)Gamma(1/2+s) product
  GammaProductSpec spec;
  spec.num_shifts = {Real(0), Real(0), Real("0.5")};
  MellinResult m = mellin_line_integral(spec, Real(1), x * x / 4, ctx);
  return m.value / (2 * mp::sqrt(const_pi()));
}

VerificationReport laguerre_rep_check(const Real& nu, unsigned n, const Real& x,
                                      const PrecisionContext& ctx) {
  if (!(nu > -1) || (n == 0 && !(nu > 0)))
    throw std::domain_error("laguerre_rep_check: parameter out of range");
  Integrand f = [&](const Real& t) {
    return mp::exp((nu + Real(n) - 1) * mp::log(t) - t - x / t) * laguerre(n, nu, t);
  };
  EndpointProfile p;  // exp(-x/t) regularizes the origin
  QuadResult q = integrate_zero_inf(f, p, ctx);
  Real sign = (n % 2 == 0) ? Real(1) : Real(-1);
  Real expected = sign * mp::exp(Real(n) * mp::log(x)) * rho(nu, x, ctx) / gamma(Real(n + 1));
  return make_report("laguerre_integral_representation", "3.1", q.value, expected,
                     ctx.verify_tol);
}

Real weight_value(const WeightKind& w, const Real& x, const PrecisionContext& ctx) {
  Real v;
  switch (w.tag) {
    case WeightTag::Rho: v = rho(w.nu, x, ctx); break;
    case WeightTag::RhoSq: {
      Real r = rho(w.nu, x, ctx);
      v = r * r;
      break;
    }
    case WeightTag::RhoProd: v = rho(w.nu + 1, x, ctx) * rho(w.nu, x, ctx); break;
    case WeightTag::RhoSqShift: {
      Real r = rho(w.nu + 1, x, ctx);
      v = r * r;
      break;
    }
  }
  if (w.alpha_power != 0) v *= mp::exp(w.alpha_power * mp::log(x));
  return v;
}

EndpointProfile weight_profile(const WeightKind& w, const Real& extra_power) {
  // rho_nu ~ x^{(nu-|nu|)/2} at 0 (log factor when the index hits 0)
  auto edge = [](const Real& nu) { return (nu - abs(nu)) / 2; };
  EndpointProfile p;
  p.decay = DecayClass::ExpSqrt;
  Real nu = w.nu;
  switch (w.tag) {
    case WeightTag::Rho:
      p.sing_exp_at_zero = edge(nu);
      p.log_factor_at_zero = (nu == 0);
      break;
    case WeightTag::RhoSq:
      p.sing_exp_at_zero = 2 * edge(nu);
      p.log_factor_at_zero = (nu == 0);
      break;
    case WeightTag::RhoProd:
      p.sing_exp_at_zero = edge(nu) + edge(nu + 1);
      p.log_factor_at_zero = (nu == 0 || nu == -1);
      break;
    case WeightTag::RhoSqShift:
      p.sing_exp_at_zero = 2 * edge(nu + 1);
      p.log_factor_at_zero = (nu == -1);
      break;
  }
  p.sing_exp_at_zero += w.alpha_power + extra_power;
  return p;
}

}  // namespace kortho

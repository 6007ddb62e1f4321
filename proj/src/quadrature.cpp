#include "kortho/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "kortho/gammafn.hpp"

namespace kortho {

namespace mp = boost::multiprecision;

namespace {

constexpr double kTMax = 7.8;  // abscissa cap for the sinh maps

// One trapezoid level of an infinite sum: caller supplies term(j) for
// integer j (j = 0 included only when include_zero). Scanning stops in each
// direction after `tail_run` consecutive terms below cutoff * running_max.
struct LevelSummer {
  Real cutoff_ratio;
  int j_max;

  template <typename TermFn>
  Real sum(const TermFn& term, int stride, bool include_zero) const {
    Real acc = 0;
    Real running_max = 0;
    for (int dir : {+1, -1}) {
      int small_run = 0;
      for (int j = (dir > 0 && include_zero) ? 0 : stride; j <= j_max;
           j += stride) {
        if (j == 0 && dir < 0) continue;
        Real t = term(dir * j);
        acc += t;
        Real a = abs(t);
        if (a > running_max) running_max = a;
        if (a < cutoff_ratio * running_max)
          ++small_run;
        else
          small_run = 0;
        if (small_run >= 4 && running_max > 0) break;
        if (j == 0 && !include_zero) break;
      }
    }
    return acc;
  }
};

QuadResult refine_levels(const std::function<Real(const Real&, int)>& level_sum,
                         const PrecisionContext& ctx, int max_levels,
                         bool relative_target = false) {
  // level_sum(h, stride_phase): phase 0 -> full sum at step h, phase 1 ->
  // odd-node sum at step h (for trapezoid halving reuse).
  Real h = 1;
  Real value = level_sum(h, 0) * h;
  QuadResult res;
  res.levels_used = 1;
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    Real odd = level_sum(h, 1) * h;
    Real next = value / 2 + odd;
    Real err = abs(next - value);
    value = next;
    res.levels_used = level + 1;
    res.value = value;
    res.err_estimate = err;
    Real scale = relative_target ? abs(value) : (std::max)(Real(1), abs(value));
    if (level >= 2 && err <= ctx.quad_target * scale) {
      res.converged = true;
      return res;
    }
  }
  throw non_convergence_error("quadrature: level cap reached without meeting quad_target");
}

QuadResult exp_sinh(const Integrand& f, const PrecisionContext& ctx, int max_levels,
                    bool relative_target = false, double t_max = kTMax) {
  const Real lam = const_pi() / 2;
  const Real cutoff = ctx.quad_target * Real("1e-6");
  auto level_sum = [&](const Real& h, int phase) -> Real {
    LevelSummer s{cutoff, static_cast<int>(t_max / static_cast<double>(h)) + 1};
    auto term = [&](int j) -> Real {
      Real t = Real(j) * h;
      Real u = lam * mp::sinh(t);
      if (u > 1500 || u < -1500) return Real(0);
      Real x = mp::exp(u);
      Real w = lam * mp::cosh(t) * x;
      return f(x) * w;
    };
    if (phase == 0) return s.sum(term, 1, true);
    // odd nodes only
    Real acc = 0;
    for (int dir : {+1, -1}) {
      int small_run = 0;
      Real running_max = 0;
      for (int j = 1; j <= s.j_max; j += 2) {
        Real t = term(dir * j);
        acc += t;
        Real a = abs(t);
        if (a > running_max) running_max = a;
        if (a < cutoff * running_max)
          ++small_run;
        else
          small_run = 0;
        if (small_run >= 4 && running_max > 0) break;
      }
    }
    return acc;
  };
  return refine_levels(level_sum, ctx, max_levels, relative_target);
}

}  // namespace

QuadResult integrate_zero_inf(const Integrand& f, const EndpointProfile& profile,
                              const PrecisionContext& ctx) {
  if (!(profile.sing_exp_at_zero > -1))
    throw std::domain_error("integrate_zero_inf: singularity exponent must exceed -1");
  int max_levels = 12 + (profile.log_factor_at_zero ? 2 : 0);
  // Endpoint exponents close to -1 push the x -> 0 mass far out in the sinh
  // variable: the node at abscissa t carries weight ~ exp(-eps (pi/4) e^t)
  // where eps = sing + 1, so the scan cap must grow like log(1/eps).
  auto cap_for = [](const Real& eps) {
    double e = eps.convert_to<double>();
    return (std::max)(static_cast<double>(kTMax), std::log(400.0 / e) + 0.5);
  };
  const Real eps1 = profile.sing_exp_at_zero + 1;
  if (eps1 < Real("0.05")) {
    // x^{eps-1} endpoints with tiny eps converge too slowly under the sinh
    // maps directly. Split at x = 1: on (0,1) substitute x = exp(-u), which
    // turns the near-singular factor into a smooth exp(-eps*u) tail that the
    // doubly exponential map resolves cheaply; on (1,oo) the integrand is
    // smooth, so a plain shifted map suffices.
    Integrand g0 = [&f, &eps1](const Real& u) {
      // The surviving term scales like exp(-eps*u); once that is below
      // e^-2000 the node contributes nothing, and evaluating f there risks
      // exponent-range overflow in intermediate factors.
      if (eps1 * u > 2000) return Real(0);
      Real x = exp(-u);
      if (x == 0) return Real(0);
      return f(x) * x;
    };
    QuadResult lower = exp_sinh(g0, ctx, max_levels, profile.relative_target);
    Integrand g1 = [&f](const Real& v) { return f(1 + v); };
    QuadResult upper = exp_sinh(g1, ctx, max_levels, profile.relative_target);
    QuadResult combined;
    combined.value = lower.value + upper.value;
    combined.err_estimate = lower.err_estimate + upper.err_estimate;
    combined.levels_used = std::max(lower.levels_used, upper.levels_used);
    combined.converged = lower.converged && upper.converged;
    return combined;
  }
  if (profile.decay == DecayClass::ExpSqrt) {
    // x = u^2 turns exp(-c sqrt(x)) decay into exp(-c u)
    Integrand g = [&f](const Real& u) { return 2 * u * f(u * u); };
    return exp_sinh(g, ctx, max_levels, profile.relative_target,
                    cap_for(2 * profile.sing_exp_at_zero + 2));
  }
  return exp_sinh(f, ctx, max_levels, profile.relative_target,
                  cap_for(profile.sing_exp_at_zero + 1));
}

QuadResult integrate_finite(const Integrand& g, const Real& a, const Real& b,
                            const Real& sing_a, const Real& sing_b,
                            const PrecisionContext& ctx) {
  if (!(a < b)) throw std::domain_error("integrate_finite: requires a < b");
  if (!(sing_a > -1 && sing_b > -1))
    throw std::domain_error("integrate_finite: endpoint exponents must exceed -1");
  const Real lam = const_pi() / 2;
  const Real half = (b - a) / 2;
  const Real cutoff = ctx.quad_target * Real("1e-6");
  const bool pow_a = (sing_a != 0), pow_b = (sing_b != 0);

  auto node_value = [&](int j, const Real& h) -> Real {
    Real t = Real(j) * h;
    Real u = lam * mp::sinh(t);
    if (u > 1200) u = 1200;
    if (u < -1200) u = -1200;
    Real e2u = mp::exp(2 * u);
    Real dist_b = half * 2 / (1 + e2u);        // b - x
    Real dist_a = half * 2 * e2u / (1 + e2u);  // x - a
    Real x = (j >= 0) ? b - dist_b : a + dist_a;
    Real ch = mp::cosh(u);
    Real w = half * lam * mp::cosh(t) / (ch * ch);
    Real v = g(x) * w;
    if (pow_a) v *= mp::exp(sing_a * mp::log(dist_a));
    if (pow_b) v *= mp::exp(sing_b * mp::log(dist_b));
    return v;
  };

  auto level_sum = [&](const Real& h, int phase) -> Real {
    int j_max = static_cast<int>(kTMax / static_cast<double>(h)) + 1;
    Real acc = 0;
    for (int dir : {+1, -1}) {
      int small_run = 0;
      Real running_max = 0;
      int start = (phase == 0) ? (dir > 0 ? 0 : 1) : 1;
      int stride = (phase == 0) ? 1 : 2;
      for (int j = start; j <= j_max; j += stride) {
        if (j == 0 && dir < 0) continue;
        Real t = node_value(dir * j, h);
        acc += t;
        Real av = abs(t);
        if (av > running_max) running_max = av;
        if (av < cutoff * running_max)
          ++small_run;
        else
          small_run = 0;
        if (small_run >= 4 && running_max > 0) break;
      }
    }
    return acc;
  };
  return refine_levels(level_sum, ctx, 12);
}

MellinResult mellin_line_integral(const GammaProductSpec& spec, const Real& gamma_line,
                                  const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw std::domain_error("mellin_line_integral: requires x > 0");
  for (const Real& a : spec.num_shifts)
    if (!(gamma_line + a > 0))
      throw pole_error("mellin_line_integral: contour not right of the poles");

  const Real two_pi = 2 * const_pi();
  const Real log_x = mp::log(x);
  const Real cutoff = ctx.quad_target * Real("1e-6");

  auto integrand = [&](const Real& tau) -> Complex {
    Complex s(gamma_line, tau);
    Complex lg{Real(0)};
    for (const Real& a : spec.num_shifts)
      lg = lg + log_gamma_complex(s + Complex(a), ctx);
    for (const Real& b : spec.den_shifts)
      lg = lg - log_gamma_complex(s + Complex(b), ctx);
    // x^{-s} = exp(-s ln x)
    return exp(lg - s * Complex(log_x));
  };

  Real imag_res = 0;
  auto level_sum = [&](const Real& h, int phase) -> Real {
    int j_max = static_cast<int>(200.0 / static_cast<double>(h)) + 1;
    Complex acc{Real(0)};
    int small_run = 0;
    Real running_max = 0;
    int start = (phase == 0) ? 0 : 1;
    int stride = (phase == 0) ? 1 : 2;
    for (int j = start; j <= j_max; j += stride) {
      Real tau = Real(j) * h;
      Complex term = integrand(tau);
      if (j > 0) term = term + integrand(-tau);  // conjugate node, summed explicitly
      acc = acc + term;
      Real av = abs(term);
      if (av > running_max) running_max = av;
      if (av < cutoff * running_max)
        ++small_run;
      else
        small_run = 0;
      if (small_run >= 4 && running_max > 0) break;
    }
    Real ir = abs(acc.im) / two_pi;
    if (ir > imag_res) imag_res = ir;
    return acc.re / two_pi;
  };

  QuadResult q = refine_levels(level_sum, ctx, 10);
  MellinResult m;
  m.value = q.value;
  m.err_estimate = q.err_estimate;
  m.levels_used = q.levels_used;
  // imag_res holds the largest per-level raw |Im| sum; weighting by the
  // coarsest step h = 1 keeps the residual conservative.
  m.imag_residual = imag_res;
  return m;
}

}  // namespace kortho

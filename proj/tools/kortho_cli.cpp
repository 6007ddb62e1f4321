// kortho command-line interface: pointwise weight evaluation, orthogonal
// sequence construction, multiple-orthogonality solvers, and the named
// verification suites, with deterministic JSON/CSV/text reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "kortho/composition.hpp"
#include "kortho/gammafn.hpp"
#include "kortho/multi.hpp"
#include "kortho/orthopoly.hpp"
#include "kortho/rho_calculus.hpp"

namespace {

using namespace kortho;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  unsigned bits = 320;
  std::string verify_tol = "1e-25";
  std::string quad_target = "1e-40";
  std::string format = "text";  // json | csv | text
  std::string output;           // empty -> stdout

  PrecisionContext context() const {
    return PrecisionContext::make(bits, verify_tol, quad_target);
  }
};

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot open output path: " + cfg.output);
  out << body;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["eq"] = r.eq;
  j["computed"] = to_string_full(r.computed);
  j["expected"] = to_string_full(r.expected);
  j["residual"] = to_string_full(r.residual);
  j["tolerance"] = to_string_full(r.tolerance);
  j["pass"] = r.pass;
  j["note"] = r.note;
  return j;
}

ordered_json document_skeleton(const RunConfig& cfg, const std::string& command) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["parameters"] = ordered_json::object();
  doc["parameters"]["precision_bits"] = cfg.bits;
  doc["parameters"]["verify_tol"] = cfg.verify_tol;
  doc["parameters"]["quad_target"] = cfg.quad_target;
  return doc;
}

std::string report_text_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << r.eq << "] " << r.name
     << "  residual=" << r.residual.convert_to<double>()
     << " tol=" << r.tolerance.convert_to<double>();
  if (!r.note.empty()) os << "  (" << r.note << ")";
  os << "\n";
  return os.str();
}

int finish_reports(const RunConfig& cfg, const std::string& command,
                   const std::vector<VerificationReport>& reports, double wall_ms) {
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (cfg.format == "json") {
    ordered_json doc = document_skeleton(cfg, command);
    doc["results"] = ordered_json::array();
    for (const auto& r : reports) doc["results"].push_back(report_json(r));
    doc["pass"] = all_pass;
    doc["wall_time_ms"] = wall_ms;
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : reports) os << report_text_line(r);
    os << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << reports.size()
       << " checks, " << wall_ms << " ms)\n";
    emit(cfg, os.str());
  }
  return all_pass ? kExitPass : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

struct SuiteOptions {
  std::vector<Real> nus;  // empty -> suite default
  int nmax = -1;          // <0 -> suite default
};

std::vector<Real> grid_or(const SuiteOptions& o, std::vector<Real> fallback) {
  return o.nus.empty() ? std::move(fallback) : o.nus;
}

int cap_or(const SuiteOptions& o, int fallback) {
  return o.nmax < 0 ? fallback : std::min(o.nmax, fallback);
}

std::vector<VerificationReport> suite_moments(const SuiteOptions& o,
                                              const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  auto nus = grid_or(o, {Real(0), Real("0.25"), Real("0.5"), Real(1), Real("1.5")});
  long mu_max = cap_or(o, 8);
  for (const Real& nu : nus) {
    PairIntegrator quad(nu, nu);
    for (long mu = 0; mu <= mu_max; ++mu) {
      Real closed = moment(WeightKind{WeightTag::RhoSq, nu, Real(0)}, Real(mu), ctx);
      Real direct = quad.integrate(Polynomial::monomial(0), mu, ctx);
      out.push_back(make_report("moment rho^2 nu=" + to_string_full(nu) +
                                    " mu=" + std::to_string(mu),
                                "4.3", direct, closed, ctx.verify_tol));
    }
  }
  {
    Real half("0.5");
    Real pi = const_pi();
    out.push_back(make_report("moment anchor nu=1/2 mu=0", "4.3",
                              moment(WeightKind{WeightTag::RhoSq, half, Real(0)}, Real(0), ctx),
                              pi / 8, ctx.verify_tol, "closed form pi/8"));
    out.push_back(make_report("moment anchor nu=1/2 mu=1", "4.3",
                              moment(WeightKind{WeightTag::RhoSq, half, Real(0)}, Real(1), ctx),
                              3 * pi / 64, ctx.verify_tol, "closed form 3 pi/64"));
    out.push_back(make_report("mixed moment anchor nu=1/2 mu=1", "4.4",
                              moment(WeightKind{WeightTag::RhoProd, half, Real(0)}, Real(1), ctx),
                              9 * pi / 128, ctx.verify_tol, "closed form 9 pi/128"));
  }
  // Contour-product evaluations against the direct Bessel products.
  for (const Real& nu : {Real("0.25"), Real("0.5")}) {
    for (const Real& x : {Real("0.5"), Real(1), Real(5)}) {
      Real direct_sq = rho(nu, x, ctx);
      direct_sq *= direct_sq;
      out.push_back(make_report("contour rho^2 nu=" + to_string_full(nu) +
                                    " x=" + to_string_full(x),
                                "3.8", mb_rho_squared(nu, x, ctx), direct_sq, ctx.verify_tol));
      Real direct_prod = rho(nu + 1, x, ctx) * rho(nu, x, ctx);
      out.push_back(make_report("contour rho_{nu+1} rho_nu nu=" + to_string_full(nu) +
                                    " x=" + to_string_full(x),
                                "3.9", mb_rho_product(nu, x, ctx), direct_prod, ctx.verify_tol));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_ode(const SuiteOptions& o, const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  auto nus = grid_or(o, {Real(0), Real("0.25"), Real("0.5"), Real(1), Real("1.5")});
  for (const Real& nu : nus) {
    for (const Real& x : {Real("0.5"), Real(1), Real(2), Real(5)}) {
      out.push_back(make_report("ode u_nu nu=" + to_string_full(nu) + " x=" + to_string_full(x),
                                "3.12", ode_residual_u(nu, x, ctx), Real(0), ctx.verify_tol));
      out.push_back(make_report("ode h_nu nu=" + to_string_full(nu) + " x=" + to_string_full(x),
                                "3.16", ode_residual_h(nu, x, ctx), Real(0), ctx.verify_tol));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_prop6(const SuiteOptions& o, const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  auto nus = grid_or(o, {Real("0.25"), Real("0.5"), Real(1), Real("1.5")});
  int n_max = cap_or(o, 4);
  for (const Real& nu : nus)
    for (int n = 0; n <= n_max; ++n) out.push_back(prop6_check(nu, n, ctx));
  return out;
}

std::vector<VerificationReport> suite_theorem1(const SuiteOptions& o,
                                               const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  auto nus = grid_or(o, {Real("0.25"), Real("0.5")});
  int n_max = cap_or(o, 3);
  for (const Real& nu : nus)
    for (int n = 0; n <= n_max; ++n)
      for (int m = 0; m <= n; ++m) out.push_back(theorem1_check(nu, n, m, ctx));
  return out;
}

std::vector<VerificationReport> suite_rodrigues(const SuiteOptions& o,
                                                const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  auto nus = grid_or(o, {Real("0.25"), Real("0.5")});
  int n_max = cap_or(o, 3);
  for (const Real& nu : nus) {
    OrthoBasis basis = gram_construct(WeightKind{WeightTag::RhoSq, nu, Real(0)}, n_max, ctx);
    for (int n = 0; n <= n_max; ++n) {
      for (const Real& x : {Real("0.5"), Real(2)}) {
        Real direct = basis.poly(n).eval(x);
        out.push_back(make_report("rodrigues nu=" + to_string_full(nu) + " n=" +
                                      std::to_string(n) + " x=" + to_string_full(x),
                                  "4.42", rodrigues_eval(nu, n, x, ctx), direct,
                                  ctx.verify_tol));
        Real b_aggregate = 0;
        Real pair_form = corollary2_eval(nu, n, x, ctx, &b_aggregate);
        out.push_back(make_report("pair-decomposed rodrigues nu=" + to_string_full(nu) +
                                      " n=" + std::to_string(n) + " x=" + to_string_full(x),
                                  "4.43", pair_form, direct, ctx.verify_tol,
                                  "rho_{nu+1} aggregate max coeff " +
                                      to_string_full(b_aggregate)));
      }
      // Determinant-ratio construction against the Gram route.
      CramerSystem cs = cramer_construct(nu, n, ctx);
      Real worst = 0;
      Real scale = basis.poly(n).max_abs_coeff();
      for (int k = 0; k <= n; ++k)
        worst = (std::max)(worst, abs(cs.coeffs(k) - basis.poly(n).coeff(k)) / scale);
      out.push_back(make_report("route equivalence nu=" + to_string_full(nu) +
                                    " n=" + std::to_string(n),
                                "4.26-4.34", worst, Real(0), Real("1e-12"),
                                "coefficientwise gap, determinant vs Gram"));
    }
    for (int n = 0; n + 1 <= n_max; ++n) {
      out.push_back(make_report("recurrence A_{n+1} nu=" + to_string_full(nu) +
                                    " n=" + std::to_string(n),
                                "4.33", recur_A_cramer(nu, n, ctx), basis.recur_A[size_t(n)],
                                ctx.verify_tol));
      out.push_back(make_report("recurrence B_n nu=" + to_string_full(nu) +
                                    " n=" + std::to_string(n),
                                "4.34", recur_B_cramer(nu, n, ctx), basis.recur_B[size_t(n)],
                                ctx.verify_tol));
    }
    for (int N = 0; N <= std::min(n_max, 3); ++N) {
      GeneratingValues gv = generating_partial(nu, Real(1), Real("0.1"), N, ctx);
      out.push_back(make_report("generating partial sum nu=" + to_string_full(nu) +
                                    " N=" + std::to_string(N),
                                "4.47", gv.rearranged, gv.direct, Real("1e-20")));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_corollary1(const SuiteOptions& o,
                                                 const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  auto nus = grid_or(o, {Real("0.25"), Real("0.5"), Real("1.5")});
  for (const Real& nu : nus)
    for (const Real& x : {Real("0.5"), Real(1), Real(2)})
      out.push_back(corollary1_check(nu, x, ctx));
  return out;
}

std::vector<VerificationReport> suite_composition(const SuiteOptions& o,
                                                  const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  Real half("0.5");
  std::vector<MeasureKind> measures = {
      MeasureKind{MeasureTag::Laguerre, half, Real(0), Real(1)},
      MeasureKind{MeasureTag::Hermite, Real(0), Real(0), Real(1)},
      MeasureKind{MeasureTag::Jacobi, Real(0), Real(0), Real(1)},
  };
  std::vector<LaplacePair> psis = {LaplacePair::power(Real(0)), LaplacePair::power(half)};
  int deg_max = cap_or(o, 2);
  for (const auto& m : measures)
    for (const auto& psi : psis)
      for (int dp = 0; dp <= deg_max; ++dp)
        for (int dq = dp; dq <= deg_max; ++dq)
          out.push_back(verify_identity(m, psi, Polynomial::monomial(dp),
                                        Polynomial::monomial(dq), ctx));
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= n; ++m) out.push_back(prudnikov_check(half, half, n, m, ctx));
  return out;
}

std::vector<VerificationReport> suite_mop(const SuiteOptions& o, const PrecisionContext& ctx) {
  std::vector<VerificationReport> out;
  Real half("0.5");
  int n_max = cap_or(o, 2);
  for (const Real& nu : grid_or(o, {Real(0), Real("0.25")})) {
    for (int n = 1; n <= n_max; ++n) {
      Type1Solution s = type1_solve(nu, half, n, n - 1, n - 1, ctx);
      VerificationReport r = type1_residual_check(s, ctx);
      r.name += " nu=" + to_string_full(nu) + " n=" + std::to_string(n);
      out.push_back(r);
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    Type2Solution s = type2_solve(Real("0.25"), half, n + 1, n, n + 1, ctx);
    VerificationReport r = type2_residual_check(s, ctx);
    r.name += " n=" + std::to_string(n);
    out.push_back(r);
  }
  for (int n = 1; n <= n_max; ++n) out.push_back(theorem5_check(Real("0.25"), Real(1), n, ctx));
  for (int n = 0; n <= 1; ++n) out.push_back(theorem6_check(Real("0.25"), half, n, ctx));
  out.push_back(theorem4_rank_check(Real("0.25"), 1, 1, 1, ctx));
  out.push_back(theorem4_rank_check(Real("-0.499"), 0, 0, 0, ctx));
  return out;
}

std::vector<VerificationReport> suite_remark3(const SuiteOptions&, const PrecisionContext& ctx) {
  return {remark3_check({Real("0.1"), Real(1), Real(4)}, ctx)};
}

using SuiteFn = std::vector<VerificationReport> (*)(const SuiteOptions&,
                                                    const PrecisionContext&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"moments", suite_moments},       {"ode", suite_ode},
      {"prop6", suite_prop6},           {"theorem1", suite_theorem1},
      {"rodrigues", suite_rodrigues},   {"corollary1", suite_corollary1},
      {"composition", suite_composition}, {"mop", suite_mop},
      {"remark3", suite_remark3},
  };
  return table;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

struct WeightsArgs {
  std::string which = "rho";
  std::string nu;
  std::string alpha = "0";
  std::string beta = "1";
  std::vector<std::string> xs;
};

int cmd_weights(const RunConfig& cfg, const WeightsArgs& a) {
  bool needs_nu = (a.which == "rho" || a.which == "rho2" || a.which == "product");
  if (needs_nu && a.nu.empty()) {
    std::cerr << "weights: --nu is required for --which " << a.which << "\n";
    return kExitUsage;
  }
  PrecisionContext ctx = cfg.context();
  Real nu = needs_nu ? Real(a.nu) : Real(0);
  std::vector<std::pair<std::string, Real>> rows;
  for (const auto& xs : a.xs) {
    Real x(xs);
    Real v;
    if (a.which == "rho") {
      v = rho(nu, x, ctx);
    } else if (a.which == "rho2") {
      v = rho(nu, x, ctx);
      v *= v;
    } else if (a.which == "product") {
      v = rho(nu + 1, x, ctx) * rho(nu, x, ctx);
    } else if (a.which == "hermite-kernel") {
      v = hermite_kernel(x, ctx);
    } else {  // jacobi-kernel
      v = omega_kernel(MeasureKind{MeasureTag::Jacobi, Real(0), Real(a.alpha), Real(a.beta)},
                       x, ctx);
    }
    rows.emplace_back(xs, v);
  }
  if (cfg.format == "json") {
    ordered_json doc = document_skeleton(cfg, "weights");
    doc["parameters"]["which"] = a.which;
    if (needs_nu) doc["parameters"]["nu"] = a.nu;
    doc["values"] = ordered_json::array();
    for (const auto& [xs, v] : rows) {
      ordered_json row;
      row["x"] = xs;
      row["value"] = to_string_full(v);
      doc["values"].push_back(row);
    }
    emit(cfg, doc.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "x,value\n";
    for (const auto& [xs, v] : rows) os << xs << "," << to_string_full(v) << "\n";
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    for (const auto& [xs, v] : rows) os << a.which << "(" << xs << ") = "
                                        << to_string_full(v) << "\n";
    emit(cfg, os.str());
  }
  return kExitPass;
}

struct OrthoArgs {
  std::string nu;
  int n = 0;
  std::string method = "gram";
};

int cmd_ortho(const RunConfig& cfg, const OrthoArgs& a) {
  Real nu(a.nu);
  if (!(nu > Real("-0.5"))) {
    std::cerr << "ortho: --nu must exceed -1/2 (weight moments diverge otherwise)\n";
    return kExitUsage;
  }
  PrecisionContext ctx = cfg.context();
  const Real cramer_tol("1e-12");

  std::vector<Polynomial> polys;
  std::vector<Real> recur_A, recur_B;
  Real route_gap = -1;
  if (a.method == "gram" || a.method == "both") {
    OrthoBasis basis = gram_construct(WeightKind{WeightTag::RhoSq, nu, Real(0)}, a.n, ctx);
    polys = basis.polys;
    recur_A = basis.recur_A;
    recur_B = basis.recur_B;
  }
  if (a.method == "cramer" || a.method == "both") {
    std::vector<Polynomial> cpolys;
    for (int n = 0; n <= a.n; ++n) {
      CramerSystem cs = cramer_construct(nu, n, ctx);
      cpolys.push_back(Polynomial(cs.coeffs));
    }
    if (a.method == "both") {
      route_gap = 0;
      for (int n = 0; n <= a.n; ++n) {
        Real scale = polys[size_t(n)].max_abs_coeff();
        for (int k = 0; k <= n; ++k)
          route_gap = (std::max)(route_gap,
                                 abs(cpolys[size_t(n)].coeff(k) - polys[size_t(n)].coeff(k)) /
                                     scale);
      }
    } else {
      polys = std::move(cpolys);
      for (int n = 0; n < a.n; ++n) {
        recur_A.push_back(recur_A_cramer(nu, n, ctx));
        recur_B.push_back(recur_B_cramer(nu, n, ctx));
      }
      if (a.n >= 1) recur_B.push_back(recur_B_cramer(nu, a.n - 1, ctx));
    }
  }

  if (cfg.format == "json") {
    ordered_json doc = document_skeleton(cfg, "ortho");
    doc["parameters"]["nu"] = a.nu;
    doc["parameters"]["n"] = a.n;
    doc["parameters"]["method"] = a.method;
    doc["polynomials"] = ordered_json::array();
    for (const auto& p : polys) {
      ordered_json coeffs = ordered_json::array();
      for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_string_full(p.coeff(k)));
      doc["polynomials"].push_back(coeffs);
    }
    doc["recurrence_A"] = ordered_json::array();
    for (const auto& v : recur_A) doc["recurrence_A"].push_back(to_string_full(v));
    doc["recurrence_B"] = ordered_json::array();
    for (const auto& v : recur_B) doc["recurrence_B"].push_back(to_string_full(v));
    if (route_gap >= 0) {
      doc["route_gap"] = to_string_full(route_gap);
      doc["pass"] = route_gap < cramer_tol;
    }
    emit(cfg, doc.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "n,k,coefficient\n";
    for (size_t n = 0; n < polys.size(); ++n)
      for (int k = 0; k <= polys[n].degree(); ++k)
        os << n << "," << k << "," << to_string_full(polys[n].coeff(k)) << "\n";
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    for (size_t n = 0; n < polys.size(); ++n) {
      os << "P_" << n << ":";
      for (int k = 0; k <= polys[n].degree(); ++k)
        os << " " << to_string_full(polys[n].coeff(k));
      os << "\n";
    }
    for (size_t n = 0; n < recur_A.size(); ++n)
      os << "A_" << n + 1 << " = " << to_string_full(recur_A[n]) << "\n";
    for (size_t n = 0; n < recur_B.size(); ++n)
      os << "B_" << n << " = " << to_string_full(recur_B[n]) << "\n";
    if (route_gap >= 0)
      os << "route gap = " << to_string_full(route_gap)
         << (route_gap < cramer_tol ? " (pass)" : " (FAIL)") << "\n";
    emit(cfg, os.str());
  }
  if (route_gap >= 0 && !(route_gap < cramer_tol)) return kExitVerifyFail;
  return kExitPass;
}

struct VerifyArgs {
  std::string suite;
  std::vector<std::string> nus;
  int nmax = -1;
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
  if (cfg.format == "csv") {
    std::cerr << "verify: CSV is for tables; use --format json or text\n";
    return kExitUsage;
  }
  SuiteOptions opts;
  for (const auto& s : a.nus) opts.nus.emplace_back(s);
  opts.nmax = a.nmax;
  std::vector<std::pair<std::string, SuiteFn>> to_run;
  if (a.suite == "all") {
    to_run = suite_registry();
  } else {
    for (const auto& entry : suite_registry())
      if (entry.first == a.suite) to_run.push_back(entry);
    if (to_run.empty()) {
      std::cerr << "verify: unknown suite '" << a.suite << "'\n";
      return kExitUsage;
    }
  }
  PrecisionContext ctx = cfg.context();
  auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  for (const auto& [name, fn] : to_run) {
    std::vector<VerificationReport> part = fn(opts, ctx);
    for (auto& r : part) {
      r.name = name + ": " + r.name;
      reports.push_back(std::move(r));
    }
  }
  double wall =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return finish_reports(cfg, "verify --suite " + a.suite, reports, wall);
}

struct MopArgs {
  int type = 0;  // 0 = unset
  std::string check;
  std::string nu = "0.25";
  std::string alpha = "0";
  int n = 0;
};

int cmd_mop(const RunConfig& cfg, const MopArgs& a) {
  if ((a.type == 0) == a.check.empty()) {
    std::cerr << "mop: give exactly one of --type {1|2} or --check {t5|t6}\n";
    return kExitUsage;
  }
  PrecisionContext ctx = cfg.context();
  Real nu(a.nu), alpha(a.alpha);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  ordered_json extra = ordered_json::object();
  if (!a.check.empty()) {
    if (a.check == "t5") {
      reports.push_back(theorem5_check(nu, alpha, std::max(a.n, 1), ctx));
    } else if (a.check == "t6") {
      reports.push_back(theorem6_check(nu, alpha, a.n, ctx));
    } else {
      std::cerr << "mop: unknown --check '" << a.check << "'\n";
      return kExitUsage;
    }
  } else if (a.type == 1) {
    Type1Solution s = type1_solve(nu, alpha, a.n, std::max(a.n - 1, 0),
                                  std::max(a.n - 1, 0), ctx);
    reports.push_back(type1_residual_check(s, ctx));
    auto poly_json = [](const Polynomial& p) {
      ordered_json c = ordered_json::array();
      for (int k = 0; k <= p.degree(); ++k) c.push_back(to_string_full(p.coeff(k)));
      return c;
    };
    extra["A"] = poly_json(s.A);
    extra["B"] = poly_json(s.B);
    extra["C"] = poly_json(s.C);
    extra["fallback_normalization"] = s.fallback_normalization;
  } else if (a.type == 2) {
    Type2Solution s = type2_solve(nu, alpha, a.n + 1, a.n, a.n + 1, ctx);
    reports.push_back(type2_residual_check(s, ctx));
    ordered_json c = ordered_json::array();
    for (int k = 0; k <= s.p.degree(); ++k) c.push_back(to_string_full(s.p.coeff(k)));
    extra["p"] = c;
  } else {
    std::cerr << "mop: --type must be 1 or 2\n";
    return kExitUsage;
  }
  double wall =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (cfg.format == "json" && !extra.empty()) {
    ordered_json doc = document_skeleton(cfg, "mop");
    doc["parameters"]["nu"] = a.nu;
    doc["parameters"]["alpha"] = a.alpha;
    doc["parameters"]["n"] = a.n;
    doc["solution"] = extra;
    doc["results"] = ordered_json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
      doc["results"].push_back(report_json(r));
      all_pass = all_pass && r.pass;
    }
    doc["pass"] = all_pass;
    doc["wall_time_ms"] = wall;
    emit(cfg, doc.dump(2) + "\n");
    return all_pass ? kExitPass : kExitVerifyFail;
  }
  if (cfg.format == "text" && !extra.empty()) {
    std::ostringstream os;
    os << extra.dump(2) << "\n";
    std::cout << os.str();
  }
  return finish_reports(cfg, "mop", reports, wall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal polynomials for Macdonald-type weights"};
  app.require_subcommand(1);
  app.fallthrough(true);

  RunConfig cfg;
  app.add_option("--precision-bits", cfg.bits, "working mantissa bits")
      ->envname("KORTHO_PRECISION_BITS")
      ->check(CLI::Range(64u, 4096u));
  app.add_option("--verify-tol", cfg.verify_tol, "pass/fail residual tolerance");
  app.add_option("--quad-target", cfg.quad_target, "quadrature truncation target");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", cfg.output, "write report to file instead of stdout");

  WeightsArgs wa;
  CLI::App* weights = app.add_subcommand("weights", "evaluate weight functions pointwise");
  weights->add_option("--which", wa.which)
      ->check(CLI::IsMember({"rho", "rho2", "product", "hermite-kernel", "jacobi-kernel"}));
  weights->add_option("--nu", wa.nu);
  weights->add_option("--alpha", wa.alpha);
  weights->add_option("--beta", wa.beta);
  weights->add_option("--x", wa.xs)->required();

  OrthoArgs oa;
  CLI::App* ortho = app.add_subcommand("ortho", "construct the orthonormal sequence");
  ortho->add_option("--nu", oa.nu)->required();
  ortho->add_option("--n", oa.n)->required()->check(CLI::Range(0, 16));
  ortho->add_option("--method", oa.method)->check(CLI::IsMember({"gram", "cramer", "both"}));

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", va.suite)->required();
  verify->add_option("--nu", va.nus, "override the nu grid");
  verify->add_option("--nmax", va.nmax, "cap the degree grid");

  MopArgs ma;
  CLI::App* mop = app.add_subcommand("mop", "multiple orthogonal polynomials");
  mop->add_option("--type", ma.type)->check(CLI::IsMember({1, 2}));
  mop->add_option("--check", ma.check)->check(CLI::IsMember({"t5", "t6"}));
  mop->add_option("--nu", ma.nu);
  mop->add_option("--alpha", ma.alpha);
  mop->add_option("--n", ma.n)->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (weights->parsed()) return cmd_weights(cfg, wa);
    if (ortho->parsed()) return cmd_ortho(cfg, oa);
    if (verify->parsed()) return cmd_verify(cfg, va);
    if (mop->parsed()) return cmd_mop(cfg, ma);
  } catch (const non_convergence_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const pole_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

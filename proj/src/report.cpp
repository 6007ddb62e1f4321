#include "kortho/report.hpp"

#include <sstream>

namespace kortho {

Real scaled_residual(const Real& computed, const Real& expected) {
  Real diff = abs(computed - expected);
  Real scale = abs(expected);
  return (scale > 1) ? diff / scale : diff;
}

VerificationReport make_report(std::string name, std::string eq, const Real& computed,
                               const Real& expected, const Real& tolerance,
                               std::string note) {
  VerificationReport r;
  r.name = std::move(name);
  r.eq = std::move(eq);
  r.computed = computed;
  r.expected = expected;
  r.residual = scaled_residual(computed, expected);
  r.tolerance = tolerance;
  r.pass = r.residual < tolerance;
  r.note = std::move(note);
  return r;
}

std::string to_string_full(const Real& x) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(Real::default_precision()) + 3) << x;
  return os.str();
}

}  // namespace kortho

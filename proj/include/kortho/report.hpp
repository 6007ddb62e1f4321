#ifndef KORTHO_REPORT_HPP
#define KORTHO_REPORT_HPP

#include <string>
#include <vector>

#include "kortho/precision.hpp"

namespace kortho {

// One named identity check. The residual is relative when the reference
// magnitude exceeds 1, absolute otherwise.
struct VerificationReport {
  std::string name;
  std::string eq;  // equation tag, e.g. "4.5"
  Real computed{0};
  Real expected{0};
  Real residual{0};
  Real tolerance{0};
  bool pass{false};
  std::string note;
};

VerificationReport make_report(std::string name, std::string eq, const Real& computed,
                               const Real& expected, const Real& tolerance,
                               std::string note = {});

// Residual with the scale policy above, reusable for multi-value checks.
Real scaled_residual(const Real& computed, const Real& expected);

std::string to_string_full(const Real& x);

}  // namespace kortho

#endif

#pragma once

#include <optional>
#include <string_view>

#include "pll/asymptotics.hpp"
#include "pll/model.hpp"

namespace pll {

/// Approximation families compared by the error studies. All rivals are
/// published for s = 1 only; kPreferred is the general-s coefficient method.
enum class MethodTag { kPreferred, kBgl, kBr1, kBr2, kBb };

const char* method_name(MethodTag m);
std::optional<MethodTag> parse_method(std::string_view name);

/// Coefficient view of a rival family. Unset fields mean the family does
/// not define that term (it is dropped, never zero-substituted, when the
/// truncated expansions are assembled).
struct RivalCoeffSet {
  MethodTag tag = MethodTag::kPreferred;
  std::optional<double> x1, x2, x3, y1, y2, z1;
};

/// Bartlett-Gower-Leslie closed forms, evaluated in the four-rate
/// parameters: kappa1 = (a1-a2)/(b1+b2), kappa2 = (a1-b1*kappa1)/(b1+b2),
/// kappa3 = ((b2-b1)/(b1+b2))*kappa2. s = 1 only.
ApproxCumulants bgl_cumulants(const ModelParams& p);

/// First Bartlett-Renshaw coefficient set; x1, x2, y1 coincide with the
/// preferred method, x3, y2, z1 differ. s = 1 implied; requires R0 > 1.
RivalCoeffSet br1_coefficients(double R0, double alpha);

/// Second Bartlett-Renshaw variant; coincides with the preferred s = 1
/// coefficients and exists so reports can show that coincidence.
RivalCoeffSet br2_coefficients(double R0, double alpha);

/// Closed-form family of Bhowmick et al. at unit shape exponents:
///   H = (alpha+1)*R0/(R0-1)^2, kappa1 = x1*N/(1 + H/N),
///   kappa2 = kappa1^2*H/N, kappa3 = -((A+B)/(C+D))*kappa2
/// with A,B,C,D rate combinations evaluated at this kappa1. s = 1 only.
ApproxCumulants bb_cumulants(const ModelParams& p);

/// Assembles kappa1 = x1*N + x2 + x3/N, kappa2 = y1*N + y2, kappa3 = z1*N
/// from whichever terms the set defines.
ApproxCumulants compose(const RivalCoeffSet& c, int N);

/// Uniform entry point used by the comparison harness.
ApproxCumulants method_cumulants(MethodTag m, const ModelParams& p);

}  // namespace pll

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lcinterp/measure.hpp"
#include "lcinterp/sampled_function.hpp"

namespace lcinterp {

/// Registered test functions. Ids are stable and appear in CSV output:
///   const_one, poly_x, poly_c11, poly_c21   polynomial members
///   analytic_cos                            cos(3x + 2y)
///   hbv_step                                1{x >= 0.37} 1{y >= -0.21}
///   kink                                    (x-0.3)|x-0.3|/2 + (y+0.4)|y+0.4|/2
///   torus_step                              1 on [1, 2.5) mod 2 pi, on the torus
[[nodiscard]] const std::vector<SampledFunction>& corpus();

/// Throws DomainError for an unknown id.
[[nodiscard]] const SampledFunction& corpus_function(std::string_view id);

/// Recomputes a registered fact on a dense grid (4097 CGL points per axis
/// merged with the registered breakpoints). Fact names:
///   "H_{J2}"           Hardy-Krause variation of f
///   "V_{1,J}", "V_{2,J}"  sup over the other variable of the 1D variation
///   "V_{1,J}(f_x)", "V_{2,J}(f_y)"  same for the plain partial derivatives
///   "V_{1,J}(D10)", "V_{2,J}(D01)", "H_{J2}(D11)"  same for D~ derivatives
///   "V_T"              variation over one period of a torus function
[[nodiscard]] double recompute_fact(const SampledFunction& f, const std::string& name, int grid_points = 4097);

/// Polynomial and analytic members; quadrature uses the tight tolerance for these.
[[nodiscard]] bool is_smooth(const SampledFunction& f);

/// Copies the breakpoints of f into spec as quadrature break angles
/// (arccos of x/y breakpoints, or the torus breakpoints for torus functions).
[[nodiscard]] NormSpec with_breaks(NormSpec spec, const SampledFunction& f, bool torus = false);

/// Smallest distance from a breakpoint of f to any CGL point cos(k pi/m), m <= max_degree.
[[nodiscard]] double breakpoint_clearance(const SampledFunction& f, int max_degree = 129);

}  // namespace lcinterp

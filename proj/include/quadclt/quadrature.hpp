// quadrature.hpp — singularity-aware Gauss-Legendre quadrature on subintervals
// of (-pi, pi). Panels are refined dyadically toward declared anchor points
// (integrable singularities, kernel peaks) and capped in width so that
// oscillatory factors such as D_n are resolved.

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadclt {

// Panel layout and tolerance for all integrals in the project.
struct QuadratureSpec {
    int dyadic_levels = 40;     // dyadic panels stacked toward each anchor
    int points_per_panel = 12;  // Gauss-Legendre nodes per panel
    double abs_tol = 1e-10;     // absolute convergence target under refinement
};

// Refinement exhausted without the result settling to abs_tol.
class NonConvergenceError : public std::runtime_error {
  public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Refinement makes the result grow without bound (non-integrable input).
class DivergenceError : public std::runtime_error {
  public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

// Panel decomposition of [a, b]: split at the anchors, refine dyadically
// toward each anchor, then cap panel widths at max_width (0 = uncapped).
// Anchors outside [a, b] are ignored; anchors may sit at the endpoints.
std::vector<std::pair<double, double>> build_panels(double a, double b,
                                                    std::span<const double> anchors,
                                                    int dyadic_levels,
                                                    double max_width = 0.0);

// Single fixed-resolution pass (no convergence loop).
double integrate_once(const std::function<double(double)>& f, double a, double b,
                      std::span<const double> anchors, const QuadratureSpec& spec,
                      double max_width = 0.0);
std::complex<double> integrate_once(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, std::span<const double> anchors,
                                    const QuadratureSpec& spec, double max_width = 0.0);

// Integrate with refinement until two successive resolutions agree to
// spec.abs_tol. Throws DivergenceError when refinement keeps inflating the
// value (tell-tale of a non-integrable singularity), NonConvergenceError
// when the budget runs out without settling.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> anchors, const QuadratureSpec& spec,
                 double max_width = 0.0);
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b, std::span<const double> anchors,
                               const QuadratureSpec& spec, double max_width = 0.0);

}  // namespace quadclt

// kernels.hpp — Dirichlet/Fejer kernel identities, the operator kernels
// A_{n,f} and E_{n,f}, the Delta_n difference functional, one-denominator
// integrals and the weighted Schur row sums: every technical-lemma quantity,
// evaluated numerically so the stated bounds and identities can be checked.

#pragma once

#include <complex>

#include "quadclt/quadrature.hpp"
#include "quadclt/spectra.hpp"

namespace quadclt {

struct KernelPoint {
    int n = 0;
    double omega = 0.0;
    std::complex<double> dirichlet{};  // D_n(omega)
    double fejer = 0.0;                // Phi_n = |D_n|^2
    double envelope = 0.0;             // H_n = sqrt(n) / (1 + n |omega|)
};

// Normalized Dirichlet kernel D_n(w) = (2 pi n)^{-1/2} sum_{t=1}^n e^{itw},
// evaluated through the closed form with the removable singularity filled in.
std::complex<double> dirichlet_kernel(int n, double omega);
double fejer_kernel_value(int n, double omega);
KernelPoint kernel_eval(int n, double omega);

// int_{-pi}^{pi} Phi_n = 1 (checked by quadrature).
double fejer_mass(int n, const QuadratureSpec& quad);

// | int D_n(l - w) D_n(w - mu) dw - sqrt(2 pi / n) D_n(l - mu) |.
double convolution_identity_residual(int n, double lambda, double mu, const QuadratureSpec& quad);

// A_{n,h}(l, mu) = int h(w) D_n(l - w) D_n(w - mu) dw.
std::complex<double> a_nh(const SpectralModel& model, int n, double lambda, double mu,
                          const QuadratureSpec& quad);

// E_{n,f}(l, mu) = int (f(w) - f(l)) D_n(l - w) D_n(w - mu) dw.
std::complex<double> e_nf(const SpectralModel& model, int n, double lambda, double mu,
                          const QuadratureSpec& quad);

// Bessel-type contract of the E_{n,f} row:
//   lhs = int |E_{n,f}(l, mu)|^2 dmu,
//   rhs = (2 pi / n) int |f(w) - f(l)|^2 Phi_n(l - w) dw,  lhs <= rhs.
struct BesselCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
BesselCheck bessel_check(const SpectralModel& model, int n, double lambda,
                         const QuadratureSpec& quad);

// Delta_n = int int f(l) |g(l) - g(mu)| H_n^2(l - mu) dl dmu.
double delta_n(const SpectralModel& model, const WeightModel& weight, int n,
               const QuadratureSpec& quad);

// int |h(l) D_n(l - mu)| dl for h with exponent gamma in [0, 1).
double one_denom_integral(const std::function<double(double)>& h, double gamma, double mu, int n,
                          const QuadratureSpec& quad);

// Schur row quantity for the kernel l_n^{(0)} with weight p = sqrt(f |g|):
//   row(mu) = (1/p(mu)) int |l_n^{(0)}(l, mu)| p(l) dl
//           = sqrt(2 pi / n) int f(l) |g(l) D_n(l - mu)| dl.
// Returns the sup over mu_grid of both forms (raw and reduced).
struct SchurRowSup {
    double raw = 0.0;
    double reduced = 0.0;
};
SchurRowSup schur_rowsup(const SpectralModel& model, const WeightModel& weight, int n,
                         std::span<const double> mu_grid, const QuadratureSpec& quad);

}  // namespace quadclt

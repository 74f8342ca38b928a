// statistic.hpp — periodogram and the centered integrated periodogram
//   F_n = sqrt(n) int g(l) (I_n(l) - E I_n(l)) dl,
// computed by two independent routes: the exact Toeplitz quadratic form
//   F_n = n^{-1/2} (X^T G_n X - sum_{|k|<n} (n-|k|) r(k) gamma_g(k)),
// and frequency-domain quadrature of g * I_n.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "quadclt/quadrature.hpp"
#include "quadclt/simulate.hpp"
#include "quadclt/spectra.hpp"

namespace quadclt {

struct StatisticResult {
    double f_n = 0.0;        // value of F_n
    double quad_form = 0.0;  // X^T G_n X (time route) or n * int g I_n (freq route)
    double centering = 0.0;  // sum_{|k|<n} (n-|k|) r(k) gamma_g(k)
    std::string route;       // "time-domain" | "frequency-domain"
};

// d_n(lambda) = (2 pi n)^{-1/2} sum_{t=1}^n x_t e^{i t lambda}.
std::complex<double> dft_ordinate(const Path& x, double lambda);

// I_n = |d_n|^2 on an arbitrary grid (direct evaluation).
std::vector<double> periodogram(const Path& x, std::span<const double> grid);

// I_n on the Fourier grid lambda_j = 2 pi j / n, j = 0..n-1, via one FFT.
std::vector<double> periodogram_fourier_grid(const Path& x);

// E I_n(lambda) = int f(w) Phi_n(lambda - w) dw (Fejer smoothing of f).
double mean_periodogram(const SpectralModel& model, double lambda, int n, const QuadratureSpec& quad);

// sum_{|k|<n} (n-|k|) r(k) gamma_g(k); the trace form of n int g E I_n.
double centering_term(const CovSequence& cov, const WeightFourier& wf, int n);

// Exact time-domain route; the G_n matvec runs through a circulant FFT.
StatisticResult integrated_statistic(const Path& x, const CovSequence& cov, const WeightFourier& wf);

// Frequency-domain route: dyadic quadrature of g * I_n with I_n evaluated
// pointwise (the weight may blow up at 0 where the Fourier grid has a gap).
StatisticResult integrated_statistic_freq(const Path& x, const WeightModel& weight,
                                          const CovSequence& cov, const WeightFourier& wf,
                                          const QuadratureSpec& quad);

}  // namespace quadclt

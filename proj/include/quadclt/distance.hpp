// distance.hpp — 1-Wasserstein distance between the exact law of
// F_n = sum_i lambda_i (xi_i^2 - 1) and its Gaussian limit N(0, sigma0^2).
// On the line d_W is the L1 distance between CDFs; the quadratic-form CDF
// comes from characteristic-function inversion (Imhof), the empirical
// variant from closed-form pieces between order statistics.

#pragma once

#include <span>
#include <vector>

#include "quadclt/oracle.hpp"

namespace quadclt {

class TailBoundError : public std::runtime_error {
  public:
    explicit TailBoundError(const std::string& what) : std::runtime_error(what) {}
};

struct CdfCurve {
    std::vector<double> xs;
    std::vector<double> ps;
    double tail_bound = 0.0;  // mass outside [xs.front(), xs.back()]
};

// Shared inversion state: the x-independent parts of the Imhof integrand are
// tabulated once on an oscillation-resolving u-grid, so a CDF evaluation is
// one weighted sine sum.
class ImhofEngine {
  public:
    // x_max: largest |x| the engine will be queried at (controls the panel
    // width needed for the sin((x + sum lambda) u / 2) factor).
    ImhofEngine(const ChiSquareWeights& weights, double x_max, double tol);

    double cdf(double x) const;  // P(sum lambda_i (xi_i^2 - 1) <= x)
    double tail_tol() const { return tail_tol_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

  private:
    struct Node {
        double u, w, atan_sum, inv_rho_over_u;
    };
    std::vector<Node> nodes_;
    double lambda_sum_ = 0.0;
    double tail_tol_ = 0.0;
};

// P(Q <= x) to within tol. Degenerate branches: one nonzero weight uses the
// exact chi-square CDF; zero nonzero weights is a domain error.
double imhof_cdf(const ChiSquareWeights& weights, double x, double tol);

// CDF curve on a grid (monotone, clamped to [0,1]).
CdfCurve cdf_curve(const ChiSquareWeights& weights, std::span<const double> xs, double tol);

// d_W(Q, N(0, sigma0^2)) = int |F_Q - Phi_sigma0|, truncated where both the
// Gaussian tail and the sub-exponential quadratic-form tail are < tol.
// Result within 2 tol. TailBoundError if no finite window achieves that.
double wasserstein_exact(const ChiSquareWeights& weights, double sigma0, double tol);

// Exact W1 between the empirical measure of `samples` and N(0, sigma0^2):
// piecewise-closed-form integration of |F_hat - Phi| between order statistics.
double wasserstein_empirical(std::span<const double> samples, double sigma0);

// E int |F_hat_m - F_Q| excess over |F_Q - Phi| from CLT fluctuations of the
// empirical CDF of m samples: integral of 2 s phi(delta/s) with
// s = sqrt(F(1-F)/m). Used to budget the empirical-vs-exact cross-check.
double empirical_bias_bound(const ChiSquareWeights& weights, double sigma0, std::size_t m,
                            double tol);

}  // namespace quadclt

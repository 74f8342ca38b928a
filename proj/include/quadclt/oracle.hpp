// oracle.hpp — exact finite-n law of F_n through the Gaussian quadratic-form
// cumulant identities. With M = Gamma_n G_n (covariance and weight Toeplitz
// matrices),
//   V_n     = (2/n)   tr(M^2),
//   kappa_4 = (48/n^2) tr(M^4),
// and F_n equals in law sum_i lambda_i (xi_i^2 - 1) with lambda_i = mu_i /
// sqrt(n), mu_i the eigenvalues of Gamma^{1/2} G Gamma^{1/2}. The kernel of
// the second-chaos representation is never materialized; these finite
// matrices carry the same information.

#pragma once

#include <optional>
#include <vector>

#include "quadclt/spectra.hpp"

namespace quadclt {

// Default cap for dense O(n^3)/eigen routes; callers may override, and the
// CLI honors the QUADCLT_DENSE_CAP environment variable.
inline constexpr int kDefaultDenseCap = 2048;
int dense_cap_from_env();

class NotPsdError : public std::runtime_error {
  public:
    explicit NotPsdError(const std::string& what) : std::runtime_error(what) {}
};

struct ChiSquareWeights {
    std::vector<double> lambda;  // sorted by decreasing |lambda_i|

    double sum_sq() const;    // sum lambda_i^2  (= V_n / 2)
    double sum_pow4() const;  // sum lambda_i^4  (= kappa_4 / 48)
    double sum_abs() const;
    double max_abs() const { return lambda.empty() ? 0.0 : std::abs(lambda.front()); }
};

struct BoundReport {
    int n = 0;
    double v_n = 0.0;
    double sigma0_sq = 0.0;
    double kappa4 = 0.0;
    double contraction_sq = 0.0;  // kappa4 / 48 = ||k_n (x)_1 k_n||^2
    double bound = 0.0;           // sqrt((sigma0^2 - V_n)^2 + contraction_sq)
    double d_exponent = 0.0;      // alpha + beta of the (f, g) pair
    bool approximate = false;     // set when kappa4 came from stochastic trace
};

// V_n = (2/n) tr((Gamma G)^2). Dense product for n <= dense_cap; exact FFT
// matvec column sweep above (same value, O(n^2 log n)).
double variance_exact(const CovSequence& cov, const WeightFourier& wf, int n,
                      int dense_cap = kDefaultDenseCap);

// kappa_4 = 48 sum_i (mu_i / sqrt(n))^4 from the eigenvalues of
// Gamma^{1/2} G Gamma^{1/2}; requires n <= dense_cap. NotPsdError if Gamma
// has an eigenvalue below -1e-10 * max.
double kappa4_exact(const CovSequence& cov, const WeightFourier& wf, int n,
                    int dense_cap = kDefaultDenseCap);

// Same trace through the matrix-product route, (48/n^2) tr((Gamma G)^4);
// used to cross-check the eigenvalue route.
double kappa4_trace(const CovSequence& cov, const WeightFourier& wf, int n,
                    int dense_cap = kDefaultDenseCap);

// Hutchinson stochastic estimate of kappa_4 for n above the dense cap.
double kappa4_hutchinson(const CovSequence& cov, const WeightFourier& wf, int n,
                         int probes = 256, std::uint64_t seed = 0x6b617070613468ULL);

// lambda_i = mu_i / sqrt(n).
ChiSquareWeights chisquare_weights(const CovSequence& cov, const WeightFourier& wf, int n,
                                   int dense_cap = kDefaultDenseCap);

// bound = sqrt((sigma0^2 - V_n)^2 + kappa4/48); the inequality's unspecified
// multiplicative constant is reported as 1.
BoundReport stein_bound(double v_n, double kappa4, double sigma0_sq);

}  // namespace quadclt

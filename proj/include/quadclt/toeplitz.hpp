// toeplitz.hpp — symmetric Toeplitz matrices from lag sequences: dense
// builders for the exact oracles and an FFT circulant-extension matvec for
// the O(n log n) paths.

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace quadclt {

// Dense symmetric Toeplitz with first column c(0..n-1).
Eigen::MatrixXd toeplitz_dense(std::span<const double> first_col, int n);

// Precomputed circulant extension for repeated products T x.
class ToeplitzOperator {
  public:
    ToeplitzOperator(std::span<const double> first_col, int n);

    int size() const { return n_; }
    std::vector<double> apply(std::span<const double> x) const;

    // x^T T x without materializing T.
    double quadratic_form(std::span<const double> x) const;

  private:
    int n_;
    std::size_t m_;
    std::vector<std::complex<double>> symbol_;  // FFT of the extended first row
};

}  // namespace quadclt

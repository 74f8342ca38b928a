// simulate.hpp — exact sampling of stationary Gaussian paths by circulant
// embedding: the covariance (r(0), ..., r(n-1)) is embedded into a circulant
// whose eigenvalues come from one FFT; a path is one more FFT of weighted
// complex normals. Same (plan, seed) always yields the same path.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quadclt/spectra.hpp"

namespace quadclt {

// The zero-padded embedding has eigenvalues below -tol_embed * max: the
// covariance is not extendable at this size and we refuse to approximate.
class NegativeEmbeddingError : public std::runtime_error {
  public:
    explicit NegativeEmbeddingError(const std::string& what) : std::runtime_error(what) {}
};

struct SamplerPlan {
    int n = 0;                      // path length
    std::size_t m = 0;              // circulant size, power of two >= 2(n-1)
    std::vector<double> circ_eigs;  // eigenvalues, clamped at 0 within tolerance
    double min_eig_raw = 0.0;       // smallest eigenvalue before clamping
    std::uint64_t cov_hash = 0;     // fingerprint of the input covariance
};

struct Path {
    std::vector<double> x;
    std::uint64_t seed = 0;
    std::uint64_t plan_ref = 0;

    int n() const { return static_cast<int>(x.size()); }
};

inline constexpr double kEmbedTol = 1e-12;  // relative clamp tolerance

// Build the embedding for paths of length n; r must reach lag n-1. Padding
// is doubled up to 4 times if eigenvalues below -kEmbedTol * max appear.
SamplerPlan plan_circulant(const CovSequence& cov, int n);

// One exact Gaussian path. Bit-identical for equal (plan, seed).
Path sample_path(const SamplerPlan& plan, std::uint64_t seed);

}  // namespace quadclt

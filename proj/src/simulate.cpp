#include "quadclt/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "quadclt/fft.hpp"
#include "quadclt/rng.hpp"

namespace quadclt {

namespace {

std::uint64_t hash_doubles(const double* data, std::size_t count) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t bits;
        std::memcpy(&bits, &data[i], sizeof bits);
        h ^= bits;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

SamplerPlan plan_circulant(const CovSequence& cov, int n) {
    if (n < 1) throw std::domain_error("path length must be >= 1");
    if (cov.max_lag() < n - 1) throw std::domain_error("covariance must reach lag n-1");

    const std::size_t base = std::bit_ceil(static_cast<std::size_t>(std::max(2 * (n - 1), 2)));
    const double r0 = cov.r[0];

    SamplerPlan plan;
    plan.n = n;
    plan.cov_hash = hash_doubles(cov.r.data(), static_cast<std::size_t>(n));

    std::size_t m = base;
    for (int attempt = 0; attempt <= 4; ++attempt, m *= 2) {
        // First circulant row: r(0..n-1), zero padding, mirrored r(n-1..1).
        std::vector<std::complex<double>> row(m, 0.0);
        row[0] = r0;
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = cov.r[static_cast<std::size_t>(k)];
            row[m - static_cast<std::size_t>(k)] = cov.r[static_cast<std::size_t>(k)];
        }
        const auto spec = fft(row, -1);

        double min_eig = spec[0].real(), max_eig = spec[0].real();
        for (const auto& z : spec) {
            min_eig = std::min(min_eig, z.real());
            max_eig = std::max(max_eig, z.real());
        }
        if (min_eig >= -kEmbedTol * std::max(max_eig, 0.0)) {
            plan.m = m;
            plan.min_eig_raw = min_eig;
            plan.circ_eigs.resize(m);
            for (std::size_t j = 0; j < m; ++j) plan.circ_eigs[j] = std::max(spec[j].real(), 0.0);
            return plan;
        }
        if (attempt == 4)
            throw NegativeEmbeddingError("circulant embedding has eigenvalue " + std::to_string(min_eig) +
                                         " after maximal padding (m=" + std::to_string(m) + ")");
    }
    throw std::logic_error("unreachable");
}

Path sample_path(const SamplerPlan& plan, std::uint64_t seed) {
    const std::size_t m = plan.m;
    Rng rng(seed);

    // Weighted complex normals; the real part of the backward FFT carries the
    // target covariance exactly:
    //   X_t = sum_j sqrt(eig_j / m) (u_j cos th_jt - v_j sin th_jt).
    std::vector<std::complex<double>> freq(m);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double u = rng.next_normal();
        const double v = rng.next_normal();
        const double s = std::sqrt(plan.circ_eigs[j] * inv_m);
        freq[j] = std::complex<double>(s * u, s * v);
    }
    const auto time = fft(freq, +1);

    Path path;
    path.seed = seed;
    path.plan_ref = plan.cov_hash;
    path.x.resize(static_cast<std::size_t>(plan.n));
    for (int t = 0; t < plan.n; ++t) path.x[static_cast<std::size_t>(t)] = time[static_cast<std::size_t>(t)].real();
    return path;
}

}  // namespace quadclt

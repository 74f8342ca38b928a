#include "quadclt/statistic.hpp"

#include <cmath>

#include "quadclt/fft.hpp"
#include "quadclt/toeplitz.hpp"

namespace quadclt {

namespace {
constexpr double kPi = M_PI;
constexpr double kTwoPi = 2.0 * M_PI;

// Fejer kernel Phi_n(u) = sin^2(nu/2) / (2 pi n sin^2(u/2)), 2pi-periodic.
double fejer_kernel(int n, double u) {
    u -= kTwoPi * std::round(u / kTwoPi);
    const double s = std::sin(0.5 * u);
    if (std::abs(s) < 1e-14) return n / kTwoPi;
    const double t = std::sin(0.5 * n * u);
    return t * t / (kTwoPi * n * s * s);
}
}  // namespace

std::complex<double> dft_ordinate(const Path& x, double lambda) {
    const int n = x.n();
    std::complex<double> acc{0.0, 0.0};
    const std::complex<double> step = std::polar(1.0, lambda);
    std::complex<double> phase = step;  // e^{i t lambda}, t starting at 1
    for (int t = 0; t < n; ++t) {
        // Rotation drift is O(n eps); re-anchor the phase periodically.
        if ((t & 255) == 255) phase = std::polar(1.0, lambda * (t + 1));
        acc += x.x[static_cast<std::size_t>(t)] * phase;
        phase *= step;
    }
    return acc / std::sqrt(kTwoPi * n);
}

std::vector<double> periodogram(const Path& x, std::span<const double> grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = std::norm(dft_ordinate(x, grid[i]));
    return out;
}

std::vector<double> periodogram_fourier_grid(const Path& x) {
    const int n = x.n();
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) buf[static_cast<std::size_t>(t)] = x.x[static_cast<std::size_t>(t)];
    const auto spec = fft(buf, +1);  // sum_t x_t e^{+2 pi i j t / n}, up to a unit phase
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = std::norm(spec[static_cast<std::size_t>(j)]) / (kTwoPi * n);
    return out;
}

double mean_periodogram(const SpectralModel& model, double lambda, int n, const QuadratureSpec& quad) {
    const double anchors[] = {0.0, lambda};
    const auto f = [&](double w) { return eval_density(model, w) * fejer_kernel(n, lambda - w); };
    return integrate(f, -kPi, kPi, anchors, quad, 4.0 / n);
}

double centering_term(const CovSequence& cov, const WeightFourier& wf, int n) {
    if (cov.max_lag() < n - 1 || wf.max_lag() < n - 1)
        throw std::domain_error("centering_term: lag sequences shorter than n-1");
    double acc = static_cast<double>(n) * cov.r[0] * wf.gamma[0];
    for (int k = 1; k < n; ++k)
        acc += 2.0 * (n - k) * cov.r[static_cast<std::size_t>(k)] * wf.gamma[static_cast<std::size_t>(k)];
    return acc;
}

StatisticResult integrated_statistic(const Path& x, const CovSequence& cov, const WeightFourier& wf) {
    const int n = x.n();
    if (cov.max_lag() < n - 1 || wf.max_lag() < n - 1)
        throw std::domain_error("integrated_statistic: lag sequences shorter than n-1");
    StatisticResult res;
    res.route = "time-domain";
    const ToeplitzOperator weight_op(wf.gamma, n);
    res.quad_form = weight_op.quadratic_form(x.x);
    res.centering = centering_term(cov, wf, n);
    res.f_n = (res.quad_form - res.centering) / std::sqrt(static_cast<double>(n));
    return res;
}

StatisticResult integrated_statistic_freq(const Path& x, const WeightModel& weight,
                                          const CovSequence& cov, const WeightFourier& wf,
                                          const QuadratureSpec& quad) {
    const int n = x.n();
    if (cov.max_lag() < n - 1 || wf.max_lag() < n - 1)
        throw std::domain_error("integrated_statistic_freq: lag sequences shorter than n-1");
    const double anchors[] = {0.0};
    const auto integrand = [&](double lam) { return eval_weight(weight, lam) * std::norm(dft_ordinate(x, lam)); };
    const double weighted = 2.0 * integrate(integrand, 0.0, kPi, anchors, quad, 2.5 / n);

    StatisticResult res;
    res.route = "frequency-domain";
    res.quad_form = static_cast<double>(n) * weighted;
    res.centering = centering_term(cov, wf, n);
    res.f_n = (res.quad_form - res.centering) / std::sqrt(static_cast<double>(n));
    return res;
}

}  // namespace quadclt

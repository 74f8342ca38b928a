#include "quadclt/distance.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <functional>
#include <memory>

#include "quadclt/quadrature.hpp"

namespace quadclt {

namespace {
constexpr double kPi = M_PI;
constexpr double kSqrt2 = 1.4142135623730950488;

double std_phi(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi); }
double std_cdf(double t) { return 0.5 * std::erfc(-t / kSqrt2); }
double std_sf(double t) { return 0.5 * std::erfc(t / kSqrt2); }

// int_{-inf}^{x} Phi_sigma(s) ds = sigma (t Phi(t) + phi(t)), t = x/sigma.
double int_cdf_left(double x, double sigma) {
    const double t = x / sigma;
    return sigma * (t * std_cdf(t) + std_phi(t));
}

// int_{x}^{inf} (1 - Phi_sigma(s)) ds = sigma (phi(t) - t (1 - Phi(t))).
double int_sf_right(double x, double sigma) {
    const double t = x / sigma;
    return sigma * (std_phi(t) - t * std_sf(t));
}

// chi_1^2 CDF.
double chisq1_cdf(double t) { return t <= 0.0 ? 0.0 : std::erf(std::sqrt(0.5 * t)); }

std::vector<double> nonzero_weights(const ChiSquareWeights& w) {
    const double top = w.max_abs();
    std::vector<double> nz;
    for (double l : w.lambda)
        if (std::abs(l) > 1e-14 * top) nz.push_back(l);
    return nz;
}

// P(|Q - EQ| >= x) <= 2 exp(-x^2 / (4 V2 + 4 B x)), Bernstein form for
// centered chi-square sums; V2 = sum lambda^2, B = max |lambda|.
double quad_tail_integral(double from, double v2, double b) {
    if (from <= 0.0) return std::numeric_limits<double>::infinity();
    const double denom = 4.0 * v2 / from + 4.0 * b;
    return 2.0 * denom * std::exp(-from / denom);
}

}  // namespace

ImhofEngine::ImhofEngine(const ChiSquareWeights& weights, double x_max, double tol) {
    const auto nz = nonzero_weights(weights);
    if (nz.size() < 2)
        throw std::domain_error("ImhofEngine requires >= 2 nonzero weights; use imhof_cdf branches");
    tail_tol_ = tol;
    for (double l : weights.lambda) lambda_sum_ += l;

    double sum_abs = 0.0;
    for (double l : nz) sum_abs += std::abs(l);
    const double y_max = std::abs(x_max) + std::abs(lambda_sum_);

    // Truncation point: with (1 + t^2)^{1/4} >= sqrt(t), rho(u) dominates
    // prod_{i in S} sqrt(|lambda_i| u) for any subset S, so the tail beyond U
    // is below (2 / (pi K)) U^{-K/2} / prod sqrt(|lambda_i|). Pick the subset
    // size K minimizing U.
    std::vector<double> sorted_abs;
    sorted_abs.reserve(nz.size());
    for (double l : nz) sorted_abs.push_back(std::abs(l));
    std::sort(sorted_abs.rbegin(), sorted_abs.rend());
    double best_log_u = std::numeric_limits<double>::infinity();
    double log_prod = 0.0;
    const int k_cap = static_cast<int>(std::min<std::size_t>(sorted_abs.size(), 64));
    for (int k = 1; k <= k_cap; ++k) {
        log_prod += std::log(sorted_abs[static_cast<std::size_t>(k - 1)]);
        if (k < 2) continue;
        const double log_u =
            (2.0 / k) * (std::log(2.0) - std::log(kPi * k * (tol / 4.0)) - 0.5 * log_prod);
        best_log_u = std::min(best_log_u, log_u);
    }
    const double u_end = std::exp(std::min(best_log_u, 690.0));
    constexpr std::size_t kNodeBudget = 1u << 22;

    const GaussRule& rule = gauss_legendre(12);
    double u = 0.0;
    while (u < u_end) {
        // Local oscillation rate of theta(u); one panel spans about a radian.
        double rate = 0.5 * y_max;
        for (double l : nz) rate += 0.5 * std::abs(l) / (1.0 + l * l * u * u);
        const double h = std::min(1.0 / rate, u_end - u);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double uq = u + 0.5 * h * (1.0 + rule.nodes[q]);
            Node node;
            node.u = uq;
            node.w = 0.5 * h * rule.weights[q];
            double atan_sum = 0.0, log_rho = 0.0;
            for (double l : nz) {
                atan_sum += std::atan(l * uq);
                log_rho += std::log1p(l * l * uq * uq);
            }
            node.atan_sum = 0.5 * atan_sum;
            log_rho *= 0.25;
            node.inv_rho_over_u = std::exp(-log_rho) / uq;
            nodes_.push_back(node);
        }
        u += h;
        if (nodes_.size() > kNodeBudget)
            throw NonConvergenceError("imhof: node budget exhausted before the tail bound closed");
        // Early exit: once the rho decay alone pushes the remaining tail
        // below budget. rho(s) >= rho(u) (s/u)^{k/2} with k factors past 1.
        int k_grown = 0;
        double log_rho_u = 0.0;
        for (double l : nz) {
            if (std::abs(l) * u >= 1.0) ++k_grown;
            log_rho_u += std::log1p(l * l * u * u);
        }
        log_rho_u *= 0.25;
        if (k_grown >= 2 && (2.0 / (kPi * k_grown)) * std::exp(-log_rho_u) < tol / 4.0) break;
    }
}

double ImhofEngine::cdf(double x) const {
    const double half_y = 0.5 * (x + lambda_sum_);
    double acc = 0.0;
    for (const auto& node : nodes_)
        acc += node.w * std::sin(node.atan_sum - half_y * node.u) * node.inv_rho_over_u;
    return std::clamp(0.5 - acc / kPi, 0.0, 1.0);
}

double imhof_cdf(const ChiSquareWeights& weights, double x, double tol) {
    const auto nz = nonzero_weights(weights);
    if (nz.empty()) throw std::domain_error("imhof_cdf: at least one nonzero weight required");
    if (nz.size() == 1) {
        const double l = nz.front();
        // lambda (xi^2 - 1): exact chi-square branch.
        if (l > 0.0) return chisq1_cdf(x / l + 1.0);
        return 1.0 - chisq1_cdf(x / l + 1.0);
    }
    const ImhofEngine engine(weights, std::abs(x), tol);
    return engine.cdf(x);
}

CdfCurve cdf_curve(const ChiSquareWeights& weights, std::span<const double> xs, double tol) {
    CdfCurve curve;
    curve.xs.assign(xs.begin(), xs.end());
    curve.ps.resize(xs.size());
    const auto nz = nonzero_weights(weights);
    double x_max = 0.0;
    for (double x : xs) x_max = std::max(x_max, std::abs(x));
    if (nz.size() >= 2) {
        const ImhofEngine engine(weights, x_max, tol);
        for (std::size_t i = 0; i < xs.size(); ++i) curve.ps[i] = engine.cdf(xs[i]);
    } else {
        for (std::size_t i = 0; i < xs.size(); ++i)
            curve.ps[i] = nz.empty() ? (xs[i] >= 0.0 ? 1.0 : 0.0) : imhof_cdf(weights, xs[i], tol);
    }
    double prev = 0.0;
    for (auto& p : curve.ps) {
        if (p < prev - 10.0 * tol)
            throw std::runtime_error("cdf_curve: non-monotone CDF beyond inversion tolerance");
        p = std::max(p, prev);
        prev = p;
    }
    if (!xs.empty()) {
        const double v2 = weights.sum_sq();
        const double b = weights.max_abs();
        curve.tail_bound = quad_tail_integral(std::abs(curve.xs.front()), v2, b) +
                           quad_tail_integral(std::abs(curve.xs.back()), v2, b);
    }
    return curve;
}

double wasserstein_exact(const ChiSquareWeights& weights, double sigma0, double tol) {
    if (!(sigma0 > 0.0)) throw std::domain_error("wasserstein_exact: sigma0 must be positive");
    const auto nz = nonzero_weights(weights);
    if (nz.empty()) return sigma0 * std::sqrt(2.0 / kPi);  // d_W(delta_0, N) = E|Z|

    const double v2 = weights.sum_sq();
    const double b = weights.max_abs();

    // Window with both tail integrals under tol/4.
    double t_cut = 6.0 * (sigma0 + std::sqrt(v2));
    bool ok = false;
    for (int i = 0; i < 60; ++i, t_cut *= 1.5) {
        const double gauss_tail = int_sf_right(t_cut, sigma0) + int_sf_right(t_cut, sigma0);
        const double q_tail = quad_tail_integral(t_cut, v2, b);
        if (gauss_tail + q_tail < tol / 4.0) {
            ok = true;
            break;
        }
    }
    if (!ok) throw TailBoundError("wasserstein_exact: tail bound not achievable");

    const auto eval_with = [&](const std::function<double(double)>& cdf_q, std::size_t points) {
        // Composite Simpson over [-T, T]; |F - Phi| has kinks, refinement
        // below takes care of them.
        const std::size_t segments = points - 1;
        const double h = 2.0 * t_cut / static_cast<double>(segments);
        double acc = 0.0;
        auto f = [&](double x) { return std::abs(cdf_q(x) - std_cdf(x / sigma0)); };
        for (std::size_t s = 0; s < segments; s += 2) {
            const double x0 = -t_cut + h * static_cast<double>(s);
            acc += f(x0) + 4.0 * f(x0 + h) + f(x0 + 2.0 * h);
        }
        return acc * h / 3.0;
    };

    std::function<double(double)> cdf_q;
    std::unique_ptr<ImhofEngine> engine;
    if (nz.size() >= 2) {
        engine = std::make_unique<ImhofEngine>(weights, t_cut, std::min(tol / (8.0 * t_cut), 1e-7));
        cdf_q = [&engine](double x) { return engine->cdf(x); };
    } else {
        cdf_q = [&weights, tol](double x) { return imhof_cdf(weights, x, tol); };
    }

    double prev = eval_with(cdf_q, 513);
    for (std::size_t points = 1025; points <= (1u << 16) + 1; points = 2 * points - 1) {
        const double cur = eval_with(cdf_q, points);
        if (std::abs(cur - prev) < tol / 2.0) return cur;
        prev = cur;
    }
    throw NonConvergenceError("wasserstein_exact: CDF-L1 integral did not settle");
}

double wasserstein_empirical(std::span<const double> samples, double sigma0) {
    if (samples.size() < 2) throw std::domain_error("wasserstein_empirical: need >= 2 samples");
    if (!(sigma0 > 0.0)) throw std::domain_error("wasserstein_empirical: sigma0 must be positive");
    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size();

    // int over a piece where F_hat = c: |c - Phi| integrates in closed form,
    // split at the single crossing q = sigma0 Phi^{-1}(c).
    const auto piece = [&](double a, double b2, double c) {
        if (!(a < b2)) return 0.0;
        const auto signed_int = [&](double lo, double hi) {
            return c * (hi - lo) - (int_cdf_left(hi, sigma0) - int_cdf_left(lo, sigma0));
        };
        if (c <= 0.0) return int_cdf_left(b2, sigma0) - int_cdf_left(a, sigma0);
        if (c >= 1.0) return signed_int(a, b2);
        const double q = sigma0 * kSqrt2 * boost::math::erf_inv(2.0 * c - 1.0);
        if (q <= a) return -(signed_int(a, b2));
        if (q >= b2) return signed_int(a, b2);
        return signed_int(a, q) - signed_int(q, b2);
    };

    double total = int_cdf_left(xs.front(), sigma0);  // F_hat = 0 below the sample
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double c = static_cast<double>(i + 1) / static_cast<double>(m);
        total += piece(xs[i], xs[i + 1], c);
    }
    total += int_sf_right(xs.back(), sigma0);  // F_hat = 1 above the sample
    return total;
}

double empirical_bias_bound(const ChiSquareWeights& weights, double sigma0, std::size_t m,
                            double tol) {
    const auto nz = nonzero_weights(weights);
    const double v2 = weights.sum_sq();
    const double t_cut = 8.0 * (sigma0 + std::sqrt(v2));
    std::function<double(double)> cdf_q;
    std::unique_ptr<ImhofEngine> engine;
    if (nz.size() >= 2) {
        engine = std::make_unique<ImhofEngine>(weights, t_cut, 1e-7);
        cdf_q = [&engine](double x) { return engine->cdf(x); };
    } else {
        cdf_q = [&](double x) { return imhof_cdf(weights, x, tol); };
    }
    // E|N(delta, s^2)| - |delta| <= 2 s phi(delta/s): integrate the excess.
    const std::size_t points = 2001;
    const double h = 2.0 * t_cut / static_cast<double>(points - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = -t_cut + h * static_cast<double>(i);
        const double fq = cdf_q(x);
        const double s = std::sqrt(std::max(fq * (1.0 - fq), 0.0) / static_cast<double>(m));
        if (s == 0.0) continue;
        const double delta = fq - std_cdf(x / sigma0);
        const double wgt = (i == 0 || i == points - 1) ? 0.5 : 1.0;
        acc += wgt * 2.0 * s * std_phi(delta / s);
    }
    return acc * h;
}

}  // namespace quadclt

#include "quadclt/spectra.hpp"

#include <cmath>

namespace quadclt {

namespace {
constexpr double kPi = M_PI;
constexpr double kTwoPi = 2.0 * M_PI;

void check_domain(double lambda) {
    if (lambda == 0.0) throw std::domain_error("density undefined at lambda = 0");
    if (std::abs(lambda) > kPi) throw std::domain_error("lambda outside (-pi, pi]");
}

// Oscillation-resolving cap: keep the cos(k lambda) phase per panel small.
double osc_width(int k) { return k > 0 ? 2.5 / static_cast<double>(k) : 0.0; }

// sum_{j in Z} |lambda + 2 pi j|^{-2H-1}, midpoint tail beyond |j| = J.
double fgn_lattice_sum(double lambda, double hurst) {
    const double p = 2.0 * hurst + 1.0;
    constexpr int J = 64;
    double s = 0.0;
    for (int j = -J; j <= J; ++j) s += std::pow(std::abs(lambda + kTwoPi * j), -p);
    const double edge = kTwoPi * (J + 0.5);
    s += (std::pow(edge + lambda, 1.0 - p) + std::pow(edge - lambda, 1.0 - p)) / (kTwoPi * (p - 1.0));
    return s;
}
}  // namespace

SlowVarying SlowVarying::constant(double c) {
    if (!(c > 0.0)) throw std::domain_error("slowly varying constant must be positive");
    return SlowVarying{Kind::Constant, c, 0.0};
}

SlowVarying SlowVarying::log_power(double c, double a) {
    if (!(c > 0.0)) throw std::domain_error("slowly varying scale must be positive");
    return SlowVarying{Kind::LogPower, c, a};
}

double SlowVarying::operator()(double lambda) const {
    if (kind == Kind::Constant) return c;
    return c * std::pow(1.0 + std::log(kPi / std::abs(lambda)), a);
}

SpectralModel SpectralModel::white_noise() { return SpectralModel{}; }

SpectralModel SpectralModel::power_law(double alpha, SlowVarying slow) {
    if (!(alpha > -1.0 && alpha < 1.0)) throw std::domain_error("power-law alpha must lie in (-1, 1)");
    SpectralModel m;
    m.kind = Kind::PowerLaw;
    m.alpha = alpha;
    m.slow = slow;
    return m;
}

SpectralModel SpectralModel::farima(double d_frac, double innov_var) {
    if (!(std::abs(d_frac) < 0.5)) throw std::domain_error("farima d must lie in (-1/2, 1/2)");
    if (!(innov_var > 0.0)) throw std::domain_error("innovation variance must be positive");
    SpectralModel m;
    m.kind = Kind::Farima;
    m.d_frac = d_frac;
    m.innov_var = innov_var;
    return m;
}

SpectralModel SpectralModel::fgn(double hurst, double var) {
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::domain_error("hurst must lie in (0, 1)");
    if (!(var > 0.0)) throw std::domain_error("variance must be positive");
    SpectralModel m;
    m.kind = Kind::Fgn;
    m.hurst = hurst;
    m.innov_var = var;
    return m;
}

double SpectralModel::alpha_eff() const {
    switch (kind) {
        case Kind::WhiteNoise: return 0.0;
        case Kind::PowerLaw: return alpha;
        case Kind::Farima: return 2.0 * d_frac;
        case Kind::Fgn: return 2.0 * hurst - 1.0;
    }
    return 0.0;
}

std::string SpectralModel::describe() const {
    switch (kind) {
        case Kind::WhiteNoise: return "whitenoise";
        case Kind::PowerLaw: return "powerlaw(alpha=" + std::to_string(alpha) + ")";
        case Kind::Farima: return "farima(d=" + std::to_string(d_frac) + ")";
        case Kind::Fgn: return "fgn(H=" + std::to_string(hurst) + ")";
    }
    return "?";
}

WeightModel WeightModel::unit() { return WeightModel{}; }

WeightModel WeightModel::power_law(double beta, SlowVarying slow, double sign) {
    if (!(beta > -1.0 && beta < 1.0)) throw std::domain_error("weight beta must lie in (-1, 1)");
    WeightModel w;
    w.kind = Kind::PowerLaw;
    w.beta = beta;
    w.slow = slow;
    w.sign = sign >= 0.0 ? 1.0 : -1.0;
    return w;
}

WeightModel WeightModel::log_score(SpectralModel base) {
    WeightModel w;
    w.kind = Kind::LogScore;
    w.base = base;
    return w;
}

WeightModel WeightModel::log_sq_hess(SpectralModel base) {
    WeightModel w;
    w.kind = Kind::LogSqHess;
    w.base = base;
    return w;
}

double WeightModel::beta_eff() const {
    switch (kind) {
        case Kind::Unit: return 0.0;
        case Kind::PowerLaw: return beta;
        // ln factors are slowly varying; the power part is |lambda|^{+alpha0}.
        case Kind::LogScore:
        case Kind::LogSqHess: return -base.alpha_eff();
    }
    return 0.0;
}

std::string WeightModel::describe() const {
    switch (kind) {
        case Kind::Unit: return "unit";
        case Kind::PowerLaw:
            return std::string(sign < 0 ? "-" : "") + "powerlaw(beta=" + std::to_string(beta) + ")";
        case Kind::LogScore: return "logscore[" + base.describe() + "]";
        case Kind::LogSqHess: return "logsqhess[" + base.describe() + "]";
    }
    return "?";
}

double eval_density(const SpectralModel& model, double lambda) {
    check_domain(lambda);
    const double x = std::abs(lambda);
    switch (model.kind) {
        case SpectralModel::Kind::WhiteNoise: return 1.0 / kTwoPi;
        case SpectralModel::Kind::PowerLaw: return std::pow(x, -model.alpha) * model.slow(x);
        case SpectralModel::Kind::Farima:
            return model.innov_var / kTwoPi * std::pow(2.0 * std::sin(0.5 * x), -2.0 * model.d_frac);
        case SpectralModel::Kind::Fgn: {
            const double h = model.hurst;
            const double scale = model.innov_var / kTwoPi * 2.0 * std::sin(kPi * h) * std::tgamma(2.0 * h + 1.0);
            return scale * (1.0 - std::cos(x)) * fgn_lattice_sum(x, h);
        }
    }
    return 0.0;
}

double eval_weight(const WeightModel& weight, double lambda) {
    check_domain(lambda);
    const double x = std::abs(lambda);
    switch (weight.kind) {
        case WeightModel::Kind::Unit: return 1.0;
        case WeightModel::Kind::PowerLaw: return weight.sign * std::pow(x, -weight.beta) * weight.slow(x);
        case WeightModel::Kind::LogScore: return std::log(x) / (kTwoPi * eval_density(weight.base, x));
        case WeightModel::Kind::LogSqHess: {
            const double lg = std::log(x);
            return lg * lg / (kTwoPi * eval_density(weight.base, x));
        }
    }
    return 0.0;
}

CovSequence autocovariance(const SpectralModel& model, int max_lag, const QuadratureSpec& quad) {
    if (max_lag < 0) throw std::domain_error("max_lag must be >= 0");
    CovSequence cov;
    cov.source = CovSequence::Source::Quadrature;
    cov.r.resize(static_cast<size_t>(max_lag) + 1);
    const double anchors[] = {0.0};
    for (int k = 0; k <= max_lag; ++k) {
        const auto f = [&](double lam) { return std::cos(k * lam) * eval_density(model, lam); };
        cov.r[static_cast<size_t>(k)] = 2.0 * integrate(f, 0.0, kPi, anchors, quad, osc_width(k));
    }
    return cov;
}

CovSequence farima_autocov(double d_frac, double innov_var, int max_lag) {
    if (!(std::abs(d_frac) < 0.5)) throw std::domain_error("farima d must lie in (-1/2, 1/2)");
    CovSequence cov;
    cov.source = CovSequence::Source::ClosedForm;
    cov.r.resize(static_cast<size_t>(max_lag) + 1);
    cov.r[0] = innov_var * std::exp(std::lgamma(1.0 - 2.0 * d_frac) - 2.0 * std::lgamma(1.0 - d_frac));
    for (int k = 1; k <= max_lag; ++k)
        cov.r[static_cast<size_t>(k)] = cov.r[static_cast<size_t>(k - 1)] * (k - 1.0 + d_frac) / (k - d_frac);
    return cov;
}

CovSequence fgn_autocov(double hurst, double var, int max_lag) {
    if (!(hurst > 0.0 && hurst < 1.0)) throw std::domain_error("hurst must lie in (0, 1)");
    CovSequence cov;
    cov.source = CovSequence::Source::ClosedForm;
    cov.r.resize(static_cast<size_t>(max_lag) + 1);
    const double p = 2.0 * hurst;
    for (int k = 0; k <= max_lag; ++k)
        cov.r[static_cast<size_t>(k)] =
            0.5 * var * (std::pow(k + 1.0, p) - 2.0 * std::pow(static_cast<double>(k), p) + std::pow(std::abs(k - 1.0), p));
    return cov;
}

CovSequence autocovariance_auto(const SpectralModel& model, int max_lag, const QuadratureSpec& quad) {
    switch (model.kind) {
        case SpectralModel::Kind::WhiteNoise: {
            CovSequence cov;
            cov.source = CovSequence::Source::ClosedForm;
            cov.r.assign(static_cast<size_t>(max_lag) + 1, 0.0);
            cov.r[0] = 1.0;
            return cov;
        }
        case SpectralModel::Kind::Farima: return farima_autocov(model.d_frac, model.innov_var, max_lag);
        case SpectralModel::Kind::Fgn: return fgn_autocov(model.hurst, model.innov_var, max_lag);
        case SpectralModel::Kind::PowerLaw: return autocovariance(model, max_lag, quad);
    }
    throw std::logic_error("unreachable");
}

WeightFourier weight_fourier(const WeightModel& weight, int max_lag, const QuadratureSpec& quad) {
    WeightFourier wf;
    wf.gamma.resize(static_cast<size_t>(max_lag) + 1);
    if (weight.kind == WeightModel::Kind::Unit) {
        std::fill(wf.gamma.begin(), wf.gamma.end(), 0.0);
        wf.gamma[0] = 1.0;
        return wf;
    }
    const double anchors[] = {0.0};
    for (int k = 0; k <= max_lag; ++k) {
        const auto f = [&](double lam) { return std::cos(k * lam) * eval_weight(weight, lam); };
        wf.gamma[static_cast<size_t>(k)] = integrate(f, 0.0, kPi, anchors, quad, osc_width(k)) / kPi;
    }
    return wf;
}

double sigma0_sq(const SpectralModel& model, const WeightModel& weight, const QuadratureSpec& quad) {
    const double anchors[] = {0.0};
    const auto f2g2 = [&](double lam) {
        const double fv = eval_density(model, lam);
        const double gv = eval_weight(weight, lam);
        return fv * fv * gv * gv;
    };
    return 4.0 * kPi * 2.0 * integrate(f2g2, 0.0, kPi, anchors, quad);
}

double log_square_integral() {
    const double lp = std::log(kPi);
    return kTwoPi * (lp * lp - 2.0 * lp + 2.0);
}

}  // namespace quadclt

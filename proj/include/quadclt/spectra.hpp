// spectra.hpp — spectral densities f and even weights g with power-law
// behavior at the origin, plus their Fourier coefficients
//   r(k)       = int_{-pi}^{pi} e^{ik\lambda} f(\lambda) d\lambda,
//   gamma_g(k) = (1/2pi) int_{-pi}^{pi} e^{ik\lambda} g(\lambda) d\lambda,
// and the limit variance sigma0^2 = 4pi int f^2 g^2.
//
// Singular integrands are handled by the dyadic quadrature in quadrature.hpp;
// FARIMA and fGn autocovariances also have closed forms that serve as
// independent oracles for the quadrature path.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadclt/quadrature.hpp"

namespace quadclt {

// Slowly varying factor on (0, pi]: either a constant or
// L(lambda) = c * (1 + ln(pi/|lambda|))^a, positive and slowly varying at 0.
struct SlowVarying {
    enum class Kind { Constant, LogPower };
    Kind kind = Kind::Constant;
    double c = 1.0;
    double a = 0.0;

    static SlowVarying constant(double c);
    static SlowVarying log_power(double c, double a);
    double operator()(double lambda) const;
};

// Spectral density f on (-pi, pi). Effective origin exponent alpha:
// f(lambda) ~ |lambda|^{-alpha} L(lambda) as lambda -> 0.
struct SpectralModel {
    enum class Kind { WhiteNoise, PowerLaw, Farima, Fgn };
    Kind kind = Kind::WhiteNoise;
    double alpha = 0.0;      // PowerLaw exponent in (-1, 1)
    SlowVarying slow{};      // PowerLaw slowly varying factor
    double d_frac = 0.0;     // Farima memory parameter in (-1/2, 1/2)
    double innov_var = 1.0;  // Farima innovation variance
    double hurst = 0.5;      // Fgn Hurst index in (0, 1)

    static SpectralModel white_noise();
    static SpectralModel power_law(double alpha, SlowVarying slow);
    static SpectralModel farima(double d_frac, double innov_var = 1.0);
    static SpectralModel fgn(double hurst, double var = 1.0);

    double alpha_eff() const;  // PowerLaw: alpha; Farima: 2 d_frac; Fgn: 2H-1
    std::string describe() const;
};

// Even weight g on (-pi, pi). Effective exponent beta at the origin.
struct WeightModel {
    enum class Kind { Unit, PowerLaw, LogScore, LogSqHess };
    Kind kind = Kind::Unit;
    double beta = 0.0;
    SlowVarying slow{};
    double sign = 1.0;
    SpectralModel base{};  // LogScore/LogSqHess: g = ln|l| / (2pi f), ln^2|l| / (2pi f)

    static WeightModel unit();
    static WeightModel power_law(double beta, SlowVarying slow, double sign = 1.0);
    static WeightModel log_score(SpectralModel base);
    static WeightModel log_sq_hess(SpectralModel base);

    double beta_eff() const;
    std::string describe() const;
};

// Autocovariance sequence r(0..K) with provenance of how it was obtained.
struct CovSequence {
    std::vector<double> r;
    enum class Source { Quadrature, ClosedForm };
    Source source = Source::Quadrature;

    int max_lag() const { return static_cast<int>(r.size()) - 1; }
    double operator[](int k) const { return r[static_cast<size_t>(k < 0 ? -k : k)]; }
};

// Weight Fourier coefficients gamma_g(0..K); real since g is even and real.
struct WeightFourier {
    std::vector<double> gamma;

    int max_lag() const { return static_cast<int>(gamma.size()) - 1; }
    double operator[](int k) const { return gamma[static_cast<size_t>(k < 0 ? -k : k)]; }
};

// f(lambda); domain error at lambda = 0 and |lambda| > pi.
double eval_density(const SpectralModel& model, double lambda);

// g(lambda); same domain contract as eval_density.
double eval_weight(const WeightModel& weight, double lambda);

// r(k) = int cos(k lambda) f(lambda) dlambda, k = 0..K, by dyadic quadrature.
CovSequence autocovariance(const SpectralModel& model, int max_lag, const QuadratureSpec& quad);

// FARIMA(0, d, 0) closed form: r(0) = s2 G(1-2d)/G(1-d)^2, then the ratio
// recursion r(k) = r(k-1) (k-1+d)/(k-d).
CovSequence farima_autocov(double d_frac, double innov_var, int max_lag);

// fGn closed form r(k) = (s2/2)(|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}).
CovSequence fgn_autocov(double hurst, double var, int max_lag);

// Closed form when the model has one (Farima/Fgn/WhiteNoise), quadrature otherwise.
CovSequence autocovariance_auto(const SpectralModel& model, int max_lag, const QuadratureSpec& quad);

// gamma_g(k) = (1/2pi) int cos(k lambda) g(lambda) dlambda, k = 0..K.
WeightFourier weight_fourier(const WeightModel& weight, int max_lag, const QuadratureSpec& quad);

// sigma0^2 = 4pi int_{-pi}^{pi} f^2 g^2; DivergenceError when 2(alpha+beta) >= 1.
double sigma0_sq(const SpectralModel& model, const WeightModel& weight, const QuadratureSpec& quad);

// int_{-pi}^{pi} ln^2|lambda| dlambda = 2pi (ln^2 pi - 2 ln pi + 2), exactly.
double log_square_integral();

}  // namespace quadclt

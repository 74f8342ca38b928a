#include "quadclt/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "quadclt/rng.hpp"
#include "quadclt/toeplitz.hpp"

namespace quadclt {

namespace {

void require_lags(const CovSequence& cov, const WeightFourier& wf, int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (cov.max_lag() < n - 1 || wf.max_lag() < n - 1)
        throw std::domain_error("lag sequences must reach n-1");
}

// Eigenvalues of Gamma^{1/2} G Gamma^{1/2}. Cholesky gives the same spectrum
// through L^T G L; fall back to the symmetric square root when Gamma is only
// semidefinite within tolerance.
Eigen::VectorXd congruent_spectrum(const CovSequence& cov, const WeightFourier& wf, int n) {
    const Eigen::MatrixXd gamma = toeplitz_dense(cov.r, n);
    const Eigen::MatrixXd weight = toeplitz_dense(wf.gamma, n);

    Eigen::LLT<Eigen::MatrixXd> llt(gamma);
    if (llt.info() == Eigen::Success) {
        const Eigen::MatrixXd l = llt.matrixL();
        const Eigen::MatrixXd b = l.transpose() * weight * l;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eg(gamma);
    const Eigen::VectorXd ev = eg.eigenvalues();
    const double max_ev = ev.cwiseAbs().maxCoeff();
    if (ev.minCoeff() < -1e-10 * max_ev)
        throw NotPsdError("covariance Toeplitz matrix is not positive semidefinite (min eig " +
                          std::to_string(ev.minCoeff()) + ")");
    const Eigen::VectorXd sq = ev.cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXd root = eg.eigenvectors() * sq.asDiagonal() * eg.eigenvectors().transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(root * weight * root, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

}  // namespace

int dense_cap_from_env() {
    if (const char* env = std::getenv("QUADCLT_DENSE_CAP")) {
        const int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return kDefaultDenseCap;
}

double ChiSquareWeights::sum_sq() const {
    double s = 0.0;
    for (double l : lambda) s += l * l;
    return s;
}

double ChiSquareWeights::sum_pow4() const {
    double s = 0.0;
    for (double l : lambda) s += l * l * l * l;
    return s;
}

double ChiSquareWeights::sum_abs() const {
    double s = 0.0;
    for (double l : lambda) s += std::abs(l);
    return s;
}

double variance_exact(const CovSequence& cov, const WeightFourier& wf, int n, int dense_cap) {
    require_lags(cov, wf, n);
    if (n <= dense_cap) {
        const Eigen::MatrixXd m = toeplitz_dense(cov.r, n) * toeplitz_dense(wf.gamma, n);
        // tr(M^2) = sum_ij M_ij M_ji.
        return 2.0 / n * m.cwiseProduct(m.transpose()).sum();
    }
    // Column sweep: tr(M^2) = sum_j e_j^T (Gamma G)^2 e_j via FFT matvecs.
    const ToeplitzOperator gamma_op(cov.r, n);
    const ToeplitzOperator weight_op(wf.gamma, n);
    double trace = 0.0;
    std::vector<double> unit(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        unit[static_cast<std::size_t>(j)] = 1.0;
        const auto col = gamma_op.apply(weight_op.apply(gamma_op.apply(weight_op.apply(unit))));
        trace += col[static_cast<std::size_t>(j)];
        unit[static_cast<std::size_t>(j)] = 0.0;
    }
    return 2.0 / n * trace;
}

double kappa4_exact(const CovSequence& cov, const WeightFourier& wf, int n, int dense_cap) {
    require_lags(cov, wf, n);
    if (n > dense_cap) throw std::domain_error("kappa4_exact: n exceeds dense_cap; use kappa4_hutchinson");
    const Eigen::VectorXd mu = congruent_spectrum(cov, wf, n);
    double s4 = 0.0;
    for (int i = 0; i < mu.size(); ++i) {
        const double m2 = mu[i] * mu[i];
        s4 += m2 * m2;
    }
    return 48.0 / (static_cast<double>(n) * n) * s4;
}

double kappa4_trace(const CovSequence& cov, const WeightFourier& wf, int n, int dense_cap) {
    require_lags(cov, wf, n);
    if (n > dense_cap) throw std::domain_error("kappa4_trace: n exceeds dense_cap");
    const Eigen::MatrixXd m = toeplitz_dense(cov.r, n) * toeplitz_dense(wf.gamma, n);
    const Eigen::MatrixXd m2 = m * m;
    return 48.0 / (static_cast<double>(n) * n) * m2.cwiseProduct(m2.transpose()).sum();
}

double kappa4_hutchinson(const CovSequence& cov, const WeightFourier& wf, int n, int probes,
                         std::uint64_t seed) {
    require_lags(cov, wf, n);
    if (probes < 1) throw std::domain_error("kappa4_hutchinson: probes must be >= 1");
    const ToeplitzOperator gamma_op(cov.r, n);
    const ToeplitzOperator weight_op(wf.gamma, n);
    Rng rng(seed);
    double acc = 0.0;
    std::vector<double> z(static_cast<std::size_t>(n));
    for (int p = 0; p < probes; ++p) {
        for (auto& v : z) v = (rng.next_u64() & 1ULL) ? 1.0 : -1.0;  // Rademacher probe
        auto y = z;
        for (int pass = 0; pass < 4; ++pass) y = gamma_op.apply(weight_op.apply(y));
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += z[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        acc += dot;
    }
    return 48.0 / (static_cast<double>(n) * n) * (acc / probes);
}

ChiSquareWeights chisquare_weights(const CovSequence& cov, const WeightFourier& wf, int n,
                                   int dense_cap) {
    require_lags(cov, wf, n);
    if (n > dense_cap) throw std::domain_error("chisquare_weights: n exceeds dense_cap");
    const Eigen::VectorXd mu = congruent_spectrum(cov, wf, n);
    ChiSquareWeights w;
    w.lambda.resize(static_cast<std::size_t>(mu.size()));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < mu.size(); ++i) w.lambda[static_cast<std::size_t>(i)] = mu[i] * scale;
    std::sort(w.lambda.begin(), w.lambda.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    return w;
}

BoundReport stein_bound(double v_n, double kappa4, double sigma0_sq) {
    if (kappa4 < 0.0) throw std::domain_error("stein_bound: kappa4 must be nonnegative");
    BoundReport rep;
    rep.v_n = v_n;
    rep.sigma0_sq = sigma0_sq;
    rep.kappa4 = kappa4;
    rep.contraction_sq = kappa4 / 48.0;
    const double gap = sigma0_sq - v_n;
    rep.bound = std::sqrt(gap * gap + rep.contraction_sq);
    return rep;
}

}  // namespace quadclt

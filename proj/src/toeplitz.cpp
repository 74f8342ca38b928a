#include "quadclt/toeplitz.hpp"

#include <bit>
#include <stdexcept>

#include "quadclt/fft.hpp"

namespace quadclt {

Eigen::MatrixXd toeplitz_dense(std::span<const double> first_col, int n) {
    if (static_cast<int>(first_col.size()) < n) throw std::domain_error("toeplitz: lag sequence shorter than n");
    Eigen::MatrixXd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = first_col[static_cast<size_t>(std::abs(i - j))];
    return t;
}

ToeplitzOperator::ToeplitzOperator(std::span<const double> first_col, int n) : n_(n) {
    if (static_cast<int>(first_col.size()) < n) throw std::domain_error("toeplitz: lag sequence shorter than n");
    m_ = std::bit_ceil(static_cast<std::size_t>(std::max(2 * n - 1, 2)));
    std::vector<std::complex<double>> row(m_, 0.0);
    row[0] = first_col[0];
    for (int k = 1; k < n; ++k) {
        row[static_cast<std::size_t>(k)] = first_col[static_cast<std::size_t>(k)];
        row[m_ - static_cast<std::size_t>(k)] = first_col[static_cast<std::size_t>(k)];
    }
    symbol_ = fft(row, -1);
}

std::vector<double> ToeplitzOperator::apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_) throw std::domain_error("toeplitz apply: length mismatch");
    std::vector<std::complex<double>> buf(m_, 0.0);
    for (int i = 0; i < n_; ++i) buf[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    auto spec = fft(buf, -1);
    for (std::size_t j = 0; j < m_; ++j) spec[j] *= symbol_[j];
    const auto conv = fft(spec, +1);
    std::vector<double> out(static_cast<std::size_t>(n_));
    const double scale = 1.0 / static_cast<double>(m_);
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = conv[static_cast<std::size_t>(i)].real() * scale;
    return out;
}

double ToeplitzOperator::quadratic_form(std::span<const double> x) const {
    const auto tx = apply(x);
    double acc = 0.0;
    for (int i = 0; i < n_; ++i) acc += x[static_cast<std::size_t>(i)] * tx[static_cast<std::size_t>(i)];
    return acc;
}

}  // namespace quadclt

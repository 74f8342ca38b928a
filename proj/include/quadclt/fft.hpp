// fft.hpp — thin FFTW wrapper. Plan creation is serialized behind a mutex
// (FFTW planning is not thread-safe); execution on distinct buffers is safe,
// so replicate-level parallel sampling works.

#pragma once

#include <complex>
#include <vector>

namespace quadclt {

// In-place-safe complex DFT, unnormalized: sign = -1 forward, +1 backward.
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in, int sign);

}  // namespace quadclt

#include "quadclt/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace quadclt {

namespace {
std::mutex g_plan_mutex;

fftw_plan get_plan(size_t n, int sign) {
    static std::map<std::pair<size_t, int>, fftw_plan> plans;
    const auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    // Dummy buffers only shape the plan; execution uses fftw_execute_dft on
    // caller arrays, so the plan must tolerate arbitrary alignment.
    std::vector<std::complex<double>> dummy(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(dummy.data()),
                                   reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw std::runtime_error("fftw plan creation failed");
    plans.emplace(key, p);
    return p;
}
}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in, int sign) {
    if (in.empty()) return {};
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        plan = get_plan(in.size(), sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    }
    std::vector<std::complex<double>> out(in.size());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace quadclt

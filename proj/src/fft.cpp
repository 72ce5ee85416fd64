#include "tfa/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace tfa {
namespace {

// plan creation is not thread-safe in fftw; execution via fftw_execute_dft is.
// FFTW_UNALIGNED lets one plan serve any buffer of the right size.
class PlanCache {
  public:
    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> scratch(n);
        auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_dft_1d(n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw std::runtime_error("fftw plan creation failed");
        plans_[key] = plan;
        return plan;
    }

  private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& v, int sign) {
    if (v.empty()) throw std::invalid_argument("fft: empty input");
    std::vector<std::complex<double>> out(v);
    fftw_plan plan = cache().get((int)v.size(), sign);
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan, p, p);
    return out;
}

}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& v) {
    return run(v, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft_unscaled(const std::vector<std::complex<double>>& v) {
    return run(v, FFTW_BACKWARD);
}

std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& v) {
    auto out = run(v, FFTW_BACKWARD);
    const double s = 1.0 / (double)v.size();
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace tfa

#ifndef BELTRAMI_FFT_HPP
#define BELTRAMI_FFT_HPP

#include <complex>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "beltrami/grid.hpp"

namespace beltrami {
namespace detail {

// FFTW planning is not thread-safe; execution is.
inline std::mutex& fftw_plan_mutex() {
    static std::mutex m;
    return m;
}

inline void fft2(std::vector<cplx>& v, int n, int sign) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_2d(
            n, n, reinterpret_cast<fftw_complex*>(v.data()),
            reinterpret_cast<fftw_complex*>(v.data()), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(plan);
    }
    if (sign == FFTW_BACKWARD) {
        const double scale = 1.0 / (static_cast<double>(n) * n);
        for (auto& x : v) x *= scale;
    }
}

}  // namespace detail

// Unitary-mean DFT pair: forward leaves raw FFTW coefficients, backward
// divides by N^2, so backward(forward(f)) == f.
inline std::vector<cplx> fft_forward(const GridFunction& f) {
    std::vector<cplx> spec = f.values();
    detail::fft2(spec, f.n(), FFTW_FORWARD);
    return spec;
}

inline GridFunction fft_backward(const Grid& g, std::vector<cplx> spec) {
    detail::fft2(spec, g.n, FFTW_BACKWARD);
    return GridFunction(g, std::move(spec));
}

// signed mode number for slot k, in [-N/2, N/2)
inline int signed_mode(int k, int n) { return k < n / 2 ? k : k - n; }

// spectral energy matching the Riemann-sum L2 norm (discrete Parseval)
inline double spectral_energy(const GridFunction& f) {
    const std::vector<cplx> spec = fft_forward(f);
    double s = 0.0;
    for (const cplx& c : spec) s += std::norm(c);
    const double h = f.grid().spacing();
    const double n2 = static_cast<double>(f.n()) * f.n();
    return s * h * h / n2;
}

}  // namespace beltrami

#endif

#ifndef BELTRAMI_SPECTRAL_HPP
#define BELTRAMI_SPECTRAL_HPP

#include <cmath>
#include <numbers>

#include "beltrami/fft.hpp"
#include "beltrami/grid.hpp"

namespace beltrami {

// Fourier convention: fhat(xi) = int f(z) exp(-2 pi i <z,xi>) dA(z), with the
// complex frequency xi = xi1 + i xi2 in cycles per unit length.  Under it the
// Wirtinger derivatives become the multipliers
//   d     : pi i conj(xi)
//   d_bar : pi i xi
// Slot (kx,ky) carries xi = (kx + i ky)/(2L) with signed modes in [-N/2,N/2).

template <class Symbol>
GridFunction apply_multiplier(const GridFunction& f, Symbol&& symbol,
                              cplx zero_mode, bool zero_nyquist) {
    const Grid& g = f.grid();
    const int n = g.n;
    const double df = 1.0 / (2.0 * g.L);
    std::vector<cplx> spec = fft_forward(f);
    for (int i = 0; i < n; ++i) {
        const int kx = signed_mode(i, n);
        for (int j = 0; j < n; ++j) {
            const int ky = signed_mode(j, n);
            cplx& c = spec[static_cast<std::size_t>(i) * n + j];
            if (kx == 0 && ky == 0) {
                c *= zero_mode;
            } else if (zero_nyquist && (kx == -n / 2 || ky == -n / 2)) {
                c = 0.0;
            } else {
                c *= symbol(cplx(kx * df, ky * df));
            }
        }
    }
    return fft_backward(g, std::move(spec));
}

inline GridFunction d(const GridFunction& f) {
    constexpr cplx pii(0.0, std::numbers::pi);
    return apply_multiplier(
        f, [&](cplx xi) { return pii * std::conj(xi); }, 0.0, true);
}

inline GridFunction d_bar(const GridFunction& f) {
    constexpr cplx pii(0.0, std::numbers::pi);
    return apply_multiplier(
        f, [&](cplx xi) { return pii * xi; }, 0.0, true);
}

// L^p norms of all Wirtinger derivatives up to `order`, added to lp_norm(f,p)
inline double sobolev_norm(const GridFunction& f, int order, double p,
                           const Region& region = Region::full()) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("sobolev_norm: order must be 1 or 2");
    const GridFunction fx = d(f);
    const GridFunction fy = d_bar(f);
    double s = lp_norm(f, p, region) + lp_norm(fx, p, region) + lp_norm(fy, p, region);
    if (order == 2)
        s += lp_norm(d(fx), p, region) + lp_norm(d(fy), p, region) +
             lp_norm(d_bar(fy), p, region);
    return s;
}

// first-order seminorm |df|_p + |d_bar f|_p
inline double sobolev_seminorm(const GridFunction& f, double p,
                               const Region& region = Region::full()) {
    return lp_norm(d(f), p, region) + lp_norm(d_bar(f), p, region);
}

}  // namespace beltrami

#endif

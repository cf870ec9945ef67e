#ifndef BELTRAMI_RANDOM_HPP
#define BELTRAMI_RANDOM_HPP

#include <cstdint>
#include <random>

#include "beltrami/bump.hpp"
#include "beltrami/fft.hpp"

namespace beltrami {

// Random band-limited field: complex Gaussian spectrum on modes with
// |kx|,|ky| <= max_mode, zero elsewhere, normalized to unit L2 norm.
inline GridFunction band_limited_noise(const Grid& g, int max_mode,
                                       std::uint64_t seed,
                                       bool mean_zero = false) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    const int n = g.n;
    std::vector<cplx> spec(g.size(), cplx(0.0));
    for (int i = 0; i < n; ++i) {
        const int kx = signed_mode(i, n);
        if (kx < -max_mode || kx > max_mode) continue;
        for (int j = 0; j < n; ++j) {
            const int ky = signed_mode(j, n);
            if (ky < -max_mode || ky > max_mode) continue;
            if (mean_zero && kx == 0 && ky == 0) continue;
            spec[static_cast<std::size_t>(i) * n + j] = cplx(nd(rng), nd(rng));
        }
    }
    GridFunction f = fft_backward(g, std::move(spec));
    const double nrm = l2_norm(f);
    if (nrm > 0.0)
        for (std::size_t k = 0; k < f.size(); ++k) f[k] /= nrm;
    return f;
}

// Smooth compactly supported random test function: bump at a random center
// inside |c| < spread, random radius, random complex amplitude.
inline GridFunction random_test_bump(const Grid& g, std::uint64_t seed,
                                     double spread = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.4, 1.0);
    const cplx center(spread * u(rng), spread * u(rng));
    const double radius = spread * ur(rng);
    const cplx amp(u(rng) + 1.2, u(rng));
    return sample(
        [&](cplx z) { return amp * bump(z - center, radius); }, g);
}

}  // namespace beltrami

#endif

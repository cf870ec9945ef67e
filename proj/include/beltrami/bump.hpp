#ifndef BELTRAMI_BUMP_HPP
#define BELTRAMI_BUMP_HPP

#include <cmath>

#include "beltrami/grid.hpp"

namespace beltrami {

// The one smooth compactly supported profile used everywhere: cutoffs,
// mollifier kernels and coefficient bumps are all rescalings of it.
//   bump(z; R) = exp(1 - 1/(1 - |z/R|^2))  for |z| < R,  0 otherwise
// It equals 1 at the origin and vanishes to all orders at |z| = R.
inline double bump(cplx z, double radius) {
    const double t = std::norm(z / radius);
    if (t >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t));
}

inline GridFunction sample_bump(const Grid& g, double radius, cplx center = 0.0) {
    return sample([&](cplx z) { return cplx(bump(z - center, radius), 0.0); }, g);
}

}  // namespace beltrami

#endif

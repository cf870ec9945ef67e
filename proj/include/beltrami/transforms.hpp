#ifndef BELTRAMI_TRANSFORMS_HPP
#define BELTRAMI_TRANSFORMS_HPP

#include <functional>
#include <numbers>
#include <string>

#include "beltrami/spectral.hpp"

namespace beltrami {

// The solid Cauchy transform and the Beurling transform as Fourier
// multipliers:
//   cauchy        : 1 / (pi i xi),  zero mode -> 0   (mean projection)
//   beurling      : conj(xi) / xi,  zero mode -> 1
//   beurling_star : xi / conj(xi),  zero mode -> 1
// The unimodular multipliers make beurling an exact L2 isometry and
// beurling_star its exact inverse, including the mean mode.  The sign of the
// beurling multiplier is pinned by the indicator oracle: cauchy(chi_D) equals
// conj(z) on the disk and 1/z outside, and beurling = d(cauchy).

struct MultiplierOp {
    std::string name;
    std::function<cplx(cplx)> symbol;
    cplx zero_mode_value;
    bool zero_nyquist;
};

inline MultiplierOp cauchy_op() {
    return {"cauchy",
            [](cplx xi) { return 1.0 / (cplx(0.0, std::numbers::pi) * xi); },
            0.0, true};
}

inline MultiplierOp beurling_op() {
    return {"beurling", [](cplx xi) { return std::conj(xi) / xi; }, 1.0, false};
}

inline MultiplierOp beurling_star_op() {
    return {"beurling_star", [](cplx xi) { return xi / std::conj(xi); }, 1.0, false};
}

inline GridFunction apply(const MultiplierOp& op, const GridFunction& f) {
    return apply_multiplier(f, op.symbol, op.zero_mode_value, op.zero_nyquist);
}

inline GridFunction cauchy(const GridFunction& f) {
    return apply(cauchy_op(), f);
}

inline GridFunction beurling(const GridFunction& f) {
    return apply(beurling_op(), f);
}

inline GridFunction beurling_star(const GridFunction& f) {
    return apply(beurling_star_op(), f);
}

// conj(B f), equal to beurling_star(conj(f))
inline GridFunction conj_beurling(const GridFunction& f) {
    return conj(beurling(f));
}

}  // namespace beltrami

#endif

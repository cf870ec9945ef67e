#ifndef BELTRAMI_ANALYTIC_HPP
#define BELTRAMI_ANALYTIC_HPP

#include <cmath>
#include <stdexcept>

#include "beltrami/bump.hpp"
#include "beltrami/spectral.hpp"

namespace beltrami {

// The extremal radial stretching: f(z) = z |z|^(1/K - 1) on |z| <= 1 and
// f(z) = z outside.  With a = (1-K)/(2K),
//   df    = (1+a) |z|^(2a)
//   dbarf = a (z/conj z) |z|^(2a)
//   ddf   = a (1+a) conj(z) |z|^(2a-2)
//   mu    = -((K-1)/(K+1)) z/conj(z)
// inside the disk; |d^2 f| ~ |z|^(2a-1) = |z|^(1/K - 2) near the origin.
struct RadialStretching {
    double K;
    double a;  // (1-K)/(2K)

    explicit RadialStretching(double K_) : K(K_), a((1.0 - K_) / (2.0 * K_)) {
        if (!(K_ >= 1.0))
            throw std::invalid_argument("RadialStretching: need K >= 1");
    }

    bool inside(cplx z) const { return std::abs(z) <= 1.0; }

    cplx f(cplx z) const {
        if (!inside(z)) return z;
        return z * std::pow(std::abs(z), 1.0 / K - 1.0);
    }
    cplx remainder(cplx z) const { return f(z) - z; }
    cplx df(cplx z) const {
        if (!inside(z)) return 1.0;
        return (1.0 + a) * std::pow(std::abs(z), 2.0 * a);
    }
    cplx dbarf(cplx z) const {
        if (!inside(z)) return 0.0;
        return a * (z / std::conj(z)) * std::pow(std::abs(z), 2.0 * a);
    }
    cplx ddf(cplx z) const {
        if (!inside(z)) return 0.0;
        return a * (1.0 + a) * std::conj(z) * std::pow(std::abs(z), 2.0 * a - 2.0);
    }
    cplx mu(cplx z) const {
        if (!inside(z)) return 0.0;
        return -((K - 1.0) / (K + 1.0)) * z / std::conj(z);
    }
};

struct RadialStretchingFields {
    GridFunction mu;
    GridFunction f_oracle;      // full f, including the linear part
    GridFunction df_oracle;
    GridFunction dbarf_oracle;
    GridFunction ddf_oracle;
};

inline RadialStretchingFields radial_stretching(double K, const Grid& g) {
    if (!g.shifted)
        throw std::invalid_argument(
            "radial_stretching: requires a shifted grid (origin excluded)");
    const RadialStretching rs(K);
    return {sample([&](cplx z) { return rs.mu(z); }, g),
            sample([&](cplx z) { return rs.f(z); }, g),
            sample([&](cplx z) { return rs.df(z); }, g),
            sample([&](cplx z) { return rs.dbarf(z); }, g),
            sample([&](cplx z) { return rs.ddf(z); }, g)};
}

struct MollifierSpec {
    double epsilon;
};

namespace detail {

// kernel sampled on the unshifted lattice of index offsets, unit grid mass
inline GridFunction mollifier_kernel(const Grid& g, double eps) {
    const int n = g.n;
    const double h = g.spacing();
    GridFunction ker(g);
    double mass = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = (i <= n / 2 ? i : i - n) * h;
        for (int j = 0; j < n; ++j) {
            const double dy = (j <= n / 2 ? j : j - n) * h;
            const double v = bump(cplx(dx, dy), eps);
            ker(i, j) = v;
            mass += v;
        }
    }
    const double scale = 1.0 / (mass * h * h);
    for (std::size_t k = 0; k < ker.size(); ++k) ker[k] *= scale;
    return ker;
}

}  // namespace detail

// Circular convolution with the normalized bump kernel at scale epsilon.
// Positive unit-mass kernel: linear, sup-norm non-increasing, support grows
// by at most epsilon.
inline GridFunction mollify(const GridFunction& f, const MollifierSpec& spec) {
    const Grid& g = f.grid();
    if (!(spec.epsilon >= 2.0 * g.spacing()))
        throw std::invalid_argument(
            "mollify: epsilon must be at least 2 * grid spacing");
    const GridFunction ker = detail::mollifier_kernel(g, spec.epsilon);
    std::vector<cplx> fs = fft_forward(f);
    const std::vector<cplx> ks = fft_forward(ker);
    const double h2 = g.spacing() * g.spacing();
    for (std::size_t i = 0; i < fs.size(); ++i) fs[i] *= ks[i] * h2;
    return fft_backward(g, std::move(fs));
}

// Complex logarithm of a non-vanishing field, branch anchored at the outer
// frame (where the principal solution has df ~ 1, log ~ 0) and propagated by
// phase unwrapping along the first row, then down every column.
inline GridFunction log_field(const GridFunction& f, double min_modulus = 1e-12) {
    const Grid& g = f.grid();
    const int n = g.n;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (std::abs(f[k]) < min_modulus)
            throw std::domain_error(
                "log_field: field modulus below threshold, logarithm branch "
                "undefined");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    auto unwrap = [&](double prev, double raw) {
        double delta = raw - prev;
        delta -= two_pi * std::round(delta / two_pi);
        return prev + delta;
    };

    GridFunction out(g);
    std::vector<double> row_phase(n);
    double prev = std::arg(f(0, 0));
    for (int j = 0; j < n; ++j) {
        const double raw = std::arg(f(0, j));
        prev = (j == 0) ? raw : unwrap(prev, raw);
        row_phase[j] = prev;
    }
    for (int j = 0; j < n; ++j) {
        double phase = row_phase[j];
        for (int i = 0; i < n; ++i) {
            const cplx v = f(i, j);
            phase = (i == 0) ? row_phase[j] : unwrap(phase, std::arg(v));
            out(i, j) = cplx(std::log(std::abs(v)), phase);
        }
    }
    return out;
}

}  // namespace beltrami

#endif

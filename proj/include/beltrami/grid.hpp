#ifndef BELTRAMI_GRID_HPP
#define BELTRAMI_GRID_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace beltrami {

using cplx = std::complex<double>;

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Square periodized domain [-L,L]^2, N samples per axis.  With `shifted`
// the samples sit at half-integer offsets, so the origin is never a node.
struct Grid {
    double L = 0.0;
    int n = 0;
    bool shifted = true;

    double spacing() const { return 2.0 * L / n; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    double coord1d(int i) const {
        const double sigma = shifted ? 0.5 : 0.0;
        return -L + (i + sigma) * spacing();
    }
    // index (i,j) -> z = x + iy with x from i, y from j (row-major)
    cplx coord(int i, int j) const { return {coord1d(i), coord1d(j)}; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

inline Grid make_grid(double L, int n, bool shifted) {
    if (!(L > 0.0))
        throw std::invalid_argument("make_grid: L must be positive");
    if (n < 8 || !is_power_of_two(n))
        throw std::invalid_argument("make_grid: N must be a power of two, N >= 8");
    return Grid{L, n, shifted};
}

class GridFunction {
public:
    GridFunction() = default;
    explicit GridFunction(const Grid& g, cplx fill = {})
        : grid_(g), v_(g.size(), fill) {}
    GridFunction(const Grid& g, std::vector<cplx> values)
        : grid_(g), v_(std::move(values)) {
        if (v_.size() != g.size())
            throw std::invalid_argument("GridFunction: values length must be N^2");
    }

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.n; }
    std::size_t size() const { return v_.size(); }

    cplx& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * grid_.n + j]; }
    cplx operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * grid_.n + j]; }
    cplx& operator[](std::size_t k) { return v_[k]; }
    cplx operator[](std::size_t k) const { return v_[k]; }

    std::vector<cplx>& values() { return v_; }
    const std::vector<cplx>& values() const { return v_; }

private:
    Grid grid_;
    std::vector<cplx> v_;
};

inline void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("grid mismatch between operands");
}

// Samples a pointwise expression; rejects non-finite values naming the node.
template <class F>
GridFunction sample(F&& expr, const Grid& g) {
    GridFunction out(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const cplx z = g.coord(i, j);
            const cplx w = expr(z);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                std::ostringstream os;
                os << "sample: non-finite value at z = (" << z.real() << ", "
                   << z.imag() << ")";
                throw std::domain_error(os.str());
            }
            out(i, j) = w;
        }
    return out;
}

inline GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

inline GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return out;
}

// pointwise product
inline GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= b[k];
    return out;
}

inline GridFunction operator*(cplx c, const GridFunction& a) {
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= c;
    return out;
}

inline GridFunction operator*(const GridFunction& a, cplx c) { return c * a; }

inline GridFunction operator+(const GridFunction& a, cplx c) {
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c;
    return out;
}

inline GridFunction operator-(const GridFunction& a) {
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -out[k];
    return out;
}

inline GridFunction conj(const GridFunction& a) {
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::conj(out[k]);
    return out;
}

inline GridFunction abs(const GridFunction& a) {
    GridFunction out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::abs(out[k]);
    return out;
}

inline double max_abs(const GridFunction& a) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k]));
    return m;
}

inline cplx mean(const GridFunction& a) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k];
    return s / static_cast<double>(a.size());
}

// real pairing <f,g> = Re sum f conj(g) h^2
inline double inner_real(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
        s += f[k].real() * g[k].real() + f[k].imag() * g[k].imag();
    const double h = f.grid().spacing();
    return s * h * h;
}

// Regions for localized measurements: the paper's "locally" is rendered as
// the central quarter of the periodized square, or a disk about the origin.
struct Region {
    enum class Kind { Full, CentralQuarter, Disk };
    Kind kind = Kind::Full;
    double radius = 0.0;  // Disk only

    static Region full() { return {Kind::Full, 0.0}; }
    static Region central_quarter() { return {Kind::CentralQuarter, 0.0}; }
    static Region disk(double r) { return {Kind::Disk, r}; }

    bool contains(const Grid& g, int i, int j) const {
        switch (kind) {
            case Kind::Full: return true;
            case Kind::CentralQuarter: {
                const double x = g.coord1d(i), y = g.coord1d(j);
                return std::abs(x) <= 0.5 * g.L && std::abs(y) <= 0.5 * g.L;
            }
            case Kind::Disk: return std::abs(g.coord(i, j)) <= radius;
        }
        return true;
    }
};

inline double lp_norm(const GridFunction& f, double p,
                      const Region& region = Region::full()) {
    if (!(p >= 1.0))
        throw std::invalid_argument("lp_norm: p must lie in [1, inf]");
    const Grid& g = f.grid();
    const double h = g.spacing();
    if (std::isinf(p)) {
        double m = 0.0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (region.contains(g, i, j)) m = std::max(m, std::abs(f(i, j)));
        return m;
    }
    double s = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (region.contains(g, i, j)) s += std::pow(std::abs(f(i, j)), p);
    return std::pow(s * h * h, 1.0 / p);
}

inline double l2_norm(const GridFunction& f, const Region& region = Region::full()) {
    return lp_norm(f, 2.0, region);
}

inline double rel_l2_error(const GridFunction& got, const GridFunction& want,
                           const Region& region = Region::full()) {
    return l2_norm(got - want, region) / l2_norm(want, region);
}

// Compactly supported data on the periodized square: padding_factor = L/radius
// must be at least 2 to keep wrap-around of slowly decaying transforms small.
struct SupportSpec {
    double radius = 1.0;
    double padding_factor = 2.0;

    static SupportSpec make(double radius, double L) {
        if (!(L / radius >= 2.0))
            throw std::invalid_argument(
                "SupportSpec: padding_factor = L/radius must be >= 2");
        return SupportSpec{radius, L / radius};
    }
};

}  // namespace beltrami

#endif

#ifndef BELTRAMI_SOLVER_HPP
#define BELTRAMI_SOLVER_HPP

#include <limits>
#include <utility>

#include "beltrami/analytic.hpp"
#include "beltrami/operators.hpp"

namespace beltrami {

enum class Normalization { principal, cauchy_potential };

// f is stored as the compactly decaying remainder: the principal solution is
// z + f_remainder, the Cauchy-potential solution is f_remainder itself.
struct SolutionField {
    GridFunction f_remainder;
    GridFunction df;
    GridFunction dbarf;
    Normalization normalization = Normalization::principal;
    SolveReport report;

    GridFunction full_f() const {
        if (normalization == Normalization::cauchy_potential) return f_remainder;
        const Grid& g = f_remainder.grid();
        GridFunction out = f_remainder;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) out(i, j) += g.coord(i, j);
        return out;
    }
};

// Principal solution: solve (Id - mu B - nu CB) w = mu + nu for w = dbar f,
// then df = 1 + B w and f = z + C w.
inline SolutionField principal_solution(const BeltramiCoefficients& coef,
                                        double tol = 1e-10, int max_iter = 0) {
    const GridFunction rhs = coef.mu + coef.nu;
    auto [w, report] = invert_beltrami(coef, rhs, tol, max_iter);
    SolutionField sol;
    sol.normalization = Normalization::principal;
    sol.dbarf = w;
    sol.df = beurling(w) + cplx(1.0);
    sol.f_remainder = cauchy(w);
    sol.report = std::move(report);
    return sol;
}

// Inhomogeneous solution: (Id - mu B - nu CB) w = h, f = C w, df = B w.
inline SolutionField inhomogeneous_solution(const BeltramiCoefficients& coef,
                                            const GridFunction& h,
                                            double tol = 1e-10, int max_iter = 0) {
    auto [w, report] = invert_beltrami(coef, h, tol, max_iter);
    SolutionField sol;
    sol.normalization = Normalization::cauchy_potential;
    sol.dbarf = w;
    sol.df = beurling(w);
    sol.f_remainder = cauchy(w);
    sol.report = std::move(report);
    return sol;
}

// pointwise PDE residual dbar f - mu df - nu conj(df) - h
inline GridFunction pde_residual(const SolutionField& sol,
                                 const BeltramiCoefficients& coef,
                                 const GridFunction* h = nullptr) {
    GridFunction r = sol.dbarf - coef.mu * sol.df - coef.nu * conj(sol.df);
    if (h) r = r - *h;
    return r;
}

// Localization F = psi f with cutoff psi of radius R:
//   H = (f - nu conj f) dbar psi - mu f dpsi + h psi
//   G = F - mu B F - nu conj F
struct Localization {
    GridFunction psi;
    GridFunction F;
    GridFunction H;
    GridFunction G;
};

inline Localization localize(const SolutionField& sol,
                             const BeltramiCoefficients& coef,
                             const GridFunction& h, double R) {
    const Grid& g = coef.mu.grid();
    if (!(R > 0.0 && R < g.L))
        throw std::invalid_argument("localize: R must lie inside the domain");
    Localization loc;
    loc.psi = sample_bump(g, R);
    const GridFunction f = sol.full_f();
    loc.F = loc.psi * f;
    const GridFunction dpsi = d(loc.psi);
    const GridFunction dbpsi = d_bar(loc.psi);
    loc.H = (f - coef.nu * conj(f)) * dbpsi - coef.mu * f * dpsi + h * loc.psi;
    loc.G = loc.F - coef.mu * beurling(loc.F) - coef.nu * conj(loc.F);
    return loc;
}

// residual of the localized equation dbar F = mu dF + nu conj(dF) + H
inline double localized_equation_residual(const Localization& loc,
                                          const BeltramiCoefficients& coef) {
    const GridFunction dF = d(loc.F);
    const GridFunction r =
        d_bar(loc.F) - coef.mu * dF - coef.nu * conj(dF) - loc.H;
    return l2_norm(r);
}

// residual of dbar G = H - conj(F) dbar nu - (B F) dbar mu, both sides
// computed independently
inline double auxiliary_equation_residual(const Localization& loc,
                                          const BeltramiCoefficients& coef) {
    const GridFunction lhs = d_bar(loc.G);
    const GridFunction rhs =
        loc.H - conj(loc.F) * d_bar(coef.nu) - beurling(loc.F) * d_bar(coef.mu);
    return l2_norm(lhs - rhs);
}

// Distributional residual of the generalized Beltrami equation against a test
// function: every derivative is moved onto phi, mu or nu; f is never
// differentiated.
inline double beltrami_pairing(const GridFunction& f,
                               const BeltramiCoefficients& coef,
                               const GridFunction& phi, const GridFunction& h) {
    const GridFunction dphi = d(phi);
    const GridFunction dbphi = d_bar(phi);
    const GridFunction fbar = conj(f);
    double s = -inner_real(f, dphi);
    s += inner_real(f, phi * conj(d(coef.mu)));
    s += inner_real(fbar, phi * conj(d_bar(coef.nu)));
    s += inner_real(f, conj(coef.mu) * dbphi);
    s += inner_real(fbar, conj(coef.nu) * dphi);
    s -= inner_real(h, phi);
    return s;
}

struct SecondDerivatives {
    GridFunction ddf;        // d d f
    GridFunction dbar_df;    // dbar d f  (= d dbar f)
    GridFunction dbar_dbarf; // dbar dbar f

    // pointwise magnitude |D^2 f|
    GridFunction magnitude() const {
        GridFunction out(ddf.grid());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = std::sqrt(std::norm(ddf[k]) + std::norm(dbar_df[k]) +
                               std::norm(dbar_dbarf[k]));
        return out;
    }
};

inline SecondDerivatives second_derivatives(const SolutionField& sol) {
    SecondDerivatives out;
    out.dbar_df = d(sol.dbarf);
    out.ddf = d(sol.df);
    out.dbar_dbarf = d_bar(sol.dbarf);
    return out;
}

// spectral-route consistency d(df) vs B(d(dbarf))
inline double second_derivative_consistency(const SolutionField& sol) {
    const GridFunction a = d(sol.df);
    const GridFunction b = beurling(d(sol.dbarf));
    const double ref = l2_norm(a);
    return ref > 0.0 ? l2_norm(a - b) / ref : l2_norm(a - b);
}

// max over the region of |dbar f| - k |df|; nonpositive up to discretization
// certifies the distortion inequality
inline double distortion_check(const SolutionField& sol, double k,
                               const Region& region = Region::central_quarter()) {
    const Grid& g = sol.df.grid();
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (region.contains(g, i, j))
                m = std::max(m, std::abs(sol.dbarf(i, j)) -
                                    k * std::abs(sol.df(i, j)));
    return m;
}

// log of df with the branch fixed at the outer frame; requires the solution
// to be non-degenerate at grid scale
inline GridFunction log_derivative(const SolutionField& sol,
                                   double min_modulus = 1e-12) {
    return log_field(sol.df, min_modulus);
}

}  // namespace beltrami

#endif

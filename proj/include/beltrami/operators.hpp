#ifndef BELTRAMI_OPERATORS_HPP
#define BELTRAMI_OPERATORS_HPP

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "beltrami/transforms.hpp"

namespace beltrami {

// Coefficient pair (mu, nu) with ellipticity ess-sup(|mu|+|nu|) = k < 1 and
// distortion K = (1+k)/(1-k).
struct BeltramiCoefficients {
    GridFunction mu;
    GridFunction nu;
    double k = 0.0;
    double K = 1.0;

    static BeltramiCoefficients from_fields(GridFunction mu, GridFunction nu) {
        require_same_grid(mu, nu);
        double k = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i)
            k = std::max(k, std::abs(mu[i]) + std::abs(nu[i]));
        if (!(k < 1.0))
            throw std::invalid_argument(
                "BeltramiCoefficients: ellipticity violated, ess-sup(|mu|+|nu|) = " +
                std::to_string(k));
        return {std::move(mu), std::move(nu), k, (1.0 + k) / (1.0 - k)};
    }
};

struct SolveReport {
    int iterations = 0;
    std::vector<double> residuals;
    bool converged = false;
    double k_used = 0.0;
};

// (Id - mu B - nu CB) w
inline GridFunction apply_beltrami(const BeltramiCoefficients& coef,
                                   const GridFunction& w) {
    require_same_grid(coef.mu, w);
    const GridFunction bw = beurling(w);
    return w - coef.mu * bw - coef.nu * conj(bw);
}

inline int neumann_iteration_bound(double k, double tol, double rhs_norm) {
    if (k <= 0.0 || rhs_norm <= tol) return 1;
    return static_cast<int>(std::ceil(std::log(tol / rhs_norm) / std::log(k))) + 16;
}

// Fixed-point inversion of (Id - A) via w <- rhs + (Id - apply)(w), where
// apply = Id - A is the full operator.  Contraction factor bounded by k.
template <class Op>
std::pair<GridFunction, SolveReport> neumann_invert(Op&& apply,
                                                    const GridFunction& rhs,
                                                    double k, double tol,
                                                    int max_iter = 0) {
    if (!(k < 1.0)) throw std::invalid_argument("neumann_invert: need k < 1");
    if (!(tol > 0.0)) throw std::invalid_argument("neumann_invert: need tol > 0");
    const double rhs_norm = l2_norm(rhs);
    if (max_iter <= 0) max_iter = neumann_iteration_bound(k, tol, rhs_norm);

    SolveReport report;
    report.k_used = k;
    GridFunction w(rhs.grid());
    for (int it = 0; it < max_iter; ++it) {
        const GridFunction res = rhs - apply(w);
        const double rn = l2_norm(res);
        report.residuals.push_back(rn);
        report.iterations = it;
        if (rn <= tol) {
            report.converged = true;
            return {std::move(w), std::move(report)};
        }
        w = w + res;
        report.iterations = it + 1;
    }
    // final residual check after exhausting the budget
    const double rn = l2_norm(rhs - apply(w));
    report.residuals.push_back(rn);
    report.converged = rn <= tol;
    return {std::move(w), std::move(report)};
}

inline std::pair<GridFunction, SolveReport> invert_beltrami(
    const BeltramiCoefficients& coef, const GridFunction& rhs, double tol = 1e-10,
    int max_iter = 0) {
    if (coef.k == 0.0) {
        SolveReport r;
        r.converged = true;
        r.iterations = 1;
        r.residuals = {0.0};
        return {rhs, std::move(r)};
    }
    return neumann_invert(
        [&](const GridFunction& w) { return apply_beltrami(coef, w); }, rhs,
        coef.k, tol, max_iter);
}

namespace detail {

inline GridFunction one_minus_nu_sq(const GridFunction& nu) {
    GridFunction out(nu.grid());
    for (std::size_t i = 0; i < nu.size(); ++i) out[i] = 1.0 - std::norm(nu[i]);
    return out;
}

inline GridFunction pointwise_div(const GridFunction& a, const GridFunction& b) {
    GridFunction out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] /= b[i];
    return out;
}

}  // namespace detail

// T Psi = Psi - B*( conj(mu)/(1-|nu|^2) Psi ) - conj( mu conj(nu)/(1-|nu|^2) Psi )
inline GridFunction apply_T(const BeltramiCoefficients& coef,
                            const GridFunction& psi) {
    require_same_grid(coef.mu, psi);
    const GridFunction den = detail::one_minus_nu_sq(coef.nu);
    const GridFunction a = detail::pointwise_div(conj(coef.mu) * psi, den);
    const GridFunction b =
        detail::pointwise_div(coef.mu * conj(coef.nu) * psi, den);
    return psi - beurling_star(a) - conj(b);
}

// T* Psi = Psi - mu/(1-|nu|^2) B Psi - conj(mu) nu/(1-|nu|^2) conj(Psi)
inline GridFunction apply_T_star(const BeltramiCoefficients& coef,
                                 const GridFunction& psi) {
    require_same_grid(coef.mu, psi);
    const GridFunction den = detail::one_minus_nu_sq(coef.nu);
    const GridFunction mu1 = detail::pointwise_div(coef.mu, den);
    const GridFunction nu1 = detail::pointwise_div(coef.nu * conj(coef.mu), den);
    return psi - mu1 * beurling(psi) - nu1 * conj(psi);
}

// closed-form inverse of (Id - nu1 C): g -> (g + nu1 conj(g)) / (1 - |nu1|^2)
inline GridFunction invert_id_minus_nuC(const GridFunction& nu1,
                                        const GridFunction& g) {
    require_same_grid(nu1, g);
    GridFunction out(g.grid());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double d = 1.0 - std::norm(nu1[i]);
        if (!(d > 0.0))
            throw std::domain_error("invert_id_minus_nuC: |nu1| >= 1 at a sample");
        out[i] = (g[i] + nu1[i] * std::conj(g[i])) / d;
    }
    return out;
}

// T* = (Id - nu1 C)(Id - mu2 B - nu2 CB) with
//   mu1 = mu/(1-|nu|^2),  nu1 = nu conj(mu)/(1-|nu|^2)
//   mu2 = mu1/(1-|nu1|^2), nu2 = nu1 conj(mu1)/(1-|nu1|^2)
struct FactoredCoefficients {
    GridFunction nu1;
    GridFunction mu2;
    GridFunction nu2;
};

inline FactoredCoefficients factor_coefficients(const BeltramiCoefficients& coef) {
    const GridFunction den = detail::one_minus_nu_sq(coef.nu);
    const GridFunction mu1 = detail::pointwise_div(coef.mu, den);
    const GridFunction nu1 = detail::pointwise_div(coef.nu * conj(coef.mu), den);
    const GridFunction den1 = detail::one_minus_nu_sq(nu1);
    FactoredCoefficients out;
    out.mu2 = detail::pointwise_div(mu1, den1);
    out.nu2 = detail::pointwise_div(nu1 * conj(mu1), den1);
    out.nu1 = nu1;
    return out;
}

// the generalized Beltrami factor of the decomposition
inline GridFunction apply_factor_beltrami(const FactoredCoefficients& fc,
                                          const GridFunction& psi) {
    const GridFunction bp = beurling(psi);
    return psi - fc.mu2 * bp - fc.nu2 * conj(bp);
}

// Solve T* x = y: peel off (Id - nu1 C) in closed form, then Neumann-invert
// the remaining generalized Beltrami factor with coefficients (mu2, nu2).
inline std::pair<GridFunction, SolveReport> invert_T_star(
    const BeltramiCoefficients& coef, const GridFunction& y, double tol = 1e-10,
    int max_iter = 0) {
    if (coef.k == 0.0) {
        SolveReport r;
        r.converged = true;
        r.iterations = 1;
        r.residuals = {0.0};
        return {y, std::move(r)};
    }
    const FactoredCoefficients fc = factor_coefficients(coef);
    const GridFunction u = invert_id_minus_nuC(fc.nu1, y);
    return neumann_invert(
        [&](const GridFunction& w) { return apply_factor_beltrami(fc, w); }, u,
        coef.k, tol, max_iter);
}

}  // namespace beltrami

#endif

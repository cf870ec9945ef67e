#ifndef BELTRAMI_REGULARITY_HPP
#define BELTRAMI_REGULARITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beltrami/random.hpp"
#include "beltrami/solver.hpp"

namespace beltrami {

// ---------------------------------------------------------------------------
// exponent thresholds

enum class TheoremPart { p_above_2 = 1, p_equal_2 = 2, conjugate_case = 3, small_K = 4 };

struct ThresholdQuery {
    double K = 1.0;
    double p = 2.0;
    double r = 2.0;  // distributional-solution exponent
    TheoremPart part = TheoremPart::p_above_2;
};

struct ExponentSet {
    enum class Kind { single, all_below_2, open_up_to_s_star };
    Kind kind;
    double s_star;  // the open endpoint; equals p for `single`, 2 for `all_below_2`
    std::string describe() const {
        switch (kind) {
            case Kind::single: return "s = " + std::to_string(s_star);
            case Kind::all_below_2: return "all q < 2";
            case Kind::open_up_to_s_star:
                return "all s < " + std::to_string(s_star) + " (open endpoint)";
        }
        return {};
    }
};

inline double critical_exponent(double K, double p) {
    return 1.0 / (1.0 / p + (K - 1.0) / (2.0 * K));
}

inline ExponentSet threshold_predict(const ThresholdQuery& q) {
    const double lower = 2.0 * q.K / (q.K + 1.0);
    auto fail = [](const std::string& what) -> ExponentSet {
        throw std::invalid_argument("threshold_predict: " + what);
    };
    switch (q.part) {
        case TheoremPart::p_above_2:
            if (!(q.p > 2.0)) return fail("part 1 requires p > 2");
            return {ExponentSet::Kind::single, q.p};
        case TheoremPart::p_equal_2:
            if (q.p != 2.0) return fail("part 2 requires p = 2");
            return {ExponentSet::Kind::all_below_2, 2.0};
        case TheoremPart::conjugate_case:
            if (!(lower < q.p && q.p < 2.0))
                return fail("part 3 requires 2K/(K+1) < p < 2");
            if (!(1.0 / q.r > 1.0 / q.p + (q.K - 1.0) / (2.0 * q.K)))
                return fail("part 3 requires 1/r > 1/p + (K-1)/(2K)");
            return {ExponentSet::Kind::open_up_to_s_star, critical_exponent(q.K, q.p)};
        case TheoremPart::small_K:
            if (!(q.K < 2.0)) return fail("part 4 requires K < 2");
            if (!(q.K < q.p && q.p < 2.0))
                return fail("part 4 requires K < p < 2");
            if (!(1.0 / q.r > 1.0 / q.p + (q.K - 1.0) / (2.0 * q.K)))
                return fail("part 4 requires 1/r > 1/p + (K-1)/(2K)");
            return {ExponentSet::Kind::open_up_to_s_star, critical_exponent(q.K, q.p)};
    }
    return fail("unknown part");
}

// ---------------------------------------------------------------------------
// weak-L^p tail exponent via log-log slope of the distribution function

struct LambdaWindow {
    double lambda_min;
    double lambda_max;
};

struct TailFit {
    double p_hat = 0.0;
    double slope = 0.0;
    double r2 = 0.0;
    int points = 0;
    double decades = 0.0;
};

// least-squares slope of log area{|g| > lambda} against log lambda over the
// window; p_hat = -slope.  Window must span at least one decade; the 5%
// extremes of the lambda ladder are trimmed.
inline TailFit tail_exponent(const GridFunction& g, const Region& region,
                             const LambdaWindow& window, int ladder = 40) {
    if (!(window.lambda_min > 0.0) || !(window.lambda_max > window.lambda_min))
        throw std::invalid_argument("tail_exponent: bad lambda window");
    const double decades = std::log10(window.lambda_max / window.lambda_min);
    if (decades < 1.0)
        throw std::invalid_argument(
            "tail_exponent: insufficient range, window must span >= 1 decade");

    const Grid& grid = g.grid();
    std::vector<double> mags;
    mags.reserve(g.size());
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j)
            if (region.contains(grid, i, j)) mags.push_back(std::abs(g(i, j)));
    std::sort(mags.begin(), mags.end());

    const double h2 = grid.spacing() * grid.spacing();
    const int trim = std::max(1, static_cast<int>(0.05 * ladder));
    std::vector<double> xs, ys;
    for (int m = trim; m < ladder - trim; ++m) {
        const double t = static_cast<double>(m) / (ladder - 1);
        const double lam =
            window.lambda_min * std::pow(window.lambda_max / window.lambda_min, t);
        const auto it = std::upper_bound(mags.begin(), mags.end(), lam);
        const double area = static_cast<double>(mags.end() - it) * h2;
        if (area <= 0.0) continue;
        xs.push_back(std::log(lam));
        ys.push_back(std::log(area));
    }
    if (xs.size() < 4)
        throw std::invalid_argument(
            "tail_exponent: insufficient range, tails empty over the window");

    const std::size_t m = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i]; sy += ys[i];
        sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i]; syy += ys[i] * ys[i];
    }
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    const double ss_tot = syy - sy * sy / m;
    const double intercept = (sy - slope * sx) / m;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = ys[i] - (slope * xs[i] + intercept);
        ss_res += e * e;
    }
    TailFit fit;
    fit.slope = slope;
    fit.p_hat = -slope;
    fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.points = static_cast<int>(m);
    fit.decades = decades;
    return fit;
}

// default window: between the value at `inner_radius` from the singularity
// (resolution floor) and the 90th percentile of |g| over the region
inline LambdaWindow default_window(const GridFunction& g, const Region& region,
                                   double inner_radius) {
    const Grid& grid = g.grid();
    std::vector<double> mags;
    double at_inner = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j) {
            if (!region.contains(grid, i, j)) continue;
            const double m = std::abs(g(i, j));
            mags.push_back(m);
            const double r = std::abs(grid.coord(i, j));
            if (std::abs(r - inner_radius) < best) {
                best = std::abs(r - inner_radius);
                at_inner = m;
            }
        }
    std::sort(mags.begin(), mags.end());
    const double p90 = mags[static_cast<std::size_t>(0.9 * (mags.size() - 1))];
    return {p90, at_inner};
}

// ---------------------------------------------------------------------------
// refinement-based integrability verdicts

enum class Verdict { finite, divergent, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::finite: return "finite";
        case Verdict::divergent: return "divergent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct RegularityReport {
    std::vector<int> levels;                         // N per refinement level
    std::vector<double> exponents;                   // tested s values
    std::map<double, std::vector<double>> norms;     // s -> norm per level
    std::map<double, Verdict> verdicts;
    std::optional<TailFit> tail;
    double predicted_threshold = 0.0;
};

// finite: successive ratios within 10% of 1; divergent: growing by >= 20%
// per refinement; otherwise inconclusive
inline Verdict classify_norm_sequence(const std::vector<double>& norms) {
    if (norms.size() < 2) return Verdict::inconclusive;
    bool cauchy = true, growing = true;
    for (std::size_t i = 1; i < norms.size(); ++i) {
        const double ratio = norms[i] / norms[i - 1];
        if (std::abs(ratio - 1.0) > 0.10) cauchy = false;
        if (ratio < 1.20) growing = false;
    }
    if (cauchy) return Verdict::finite;
    if (growing) return Verdict::divergent;
    return Verdict::inconclusive;
}

// L^s norms of |D^2 f| per refinement level, verdict per exponent
inline RegularityReport regularity_report(
    const std::vector<GridFunction>& d2_magnitudes, const std::vector<int>& levels,
    const std::vector<double>& exponents, const Region& region,
    double predicted_threshold) {
    if (d2_magnitudes.size() != levels.size())
        throw std::invalid_argument("regularity_report: one field per level");
    RegularityReport rep;
    rep.levels = levels;
    rep.exponents = exponents;
    rep.predicted_threshold = predicted_threshold;
    for (double s : exponents) {
        std::vector<double> ns;
        for (const GridFunction& f : d2_magnitudes)
            ns.push_back(lp_norm(f, s, region));
        rep.verdicts[s] = classify_norm_sequence(ns);
        rep.norms[s] = std::move(ns);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// experiment drivers

struct LogDerivRow {
    double epsilon;
    double seminorm_logdf;   // || |d g| + |dbar g| ||_p
    double seminorm_coef;    // || |d mu| + |dbar... | ||_p  (nu = 0 here)
    double ratio;
};

// Lemma-style boundedness probe: mollified radial-stretching coefficients,
// ratio of the L^p seminorm of log(df) to the coefficient seminorm, per
// smoothing scale.  The claim under test is that the ratio stays bounded.
inline std::vector<LogDerivRow> log_derivative_experiment(
    double K, double p, const std::vector<double>& eps_list, const Grid& g,
    const Region& region = Region::disk(0.75), double tol = 1e-10) {
    const double lower = 2.0 * K / (K + 1.0);
    const double upper = K > 1.0 ? 2.0 * K / (K - 1.0)
                                 : std::numeric_limits<double>::infinity();
    if (!(lower < p && p < upper))
        throw std::invalid_argument(
            "log_derivative_experiment: p outside the critical interval "
            "(2K/(K+1), 2K/(K-1))");
    std::vector<LogDerivRow> rows;
    if (K == 1.0) {
        for (double e : eps_list) rows.push_back({e, 0.0, 0.0, 0.0});
        return rows;  // mu = 0, log df = 0: degenerate
    }
    const RadialStretchingFields rs = radial_stretching(K, g);
    for (double eps : eps_list) {
        const GridFunction mu_eps = mollify(rs.mu, {eps});
        const auto coef = BeltramiCoefficients::from_fields(mu_eps, GridFunction(g));
        const SolutionField sol = principal_solution(coef, tol);
        const GridFunction logdf = log_derivative(sol);
        LogDerivRow row;
        row.epsilon = eps;
        const GridFunction da = beltrami::d(logdf), db = d_bar(logdf);
        const GridFunction ma = beltrami::d(mu_eps), mb = d_bar(mu_eps);
        row.seminorm_logdf = lp_norm(abs(da) + abs(db), p, region);
        row.seminorm_coef = lp_norm(abs(ma) + abs(mb), p, region);
        row.ratio = row.seminorm_coef > 0.0 ? row.seminorm_logdf / row.seminorm_coef
                                            : 0.0;
        rows.push_back(row);
    }
    return rows;
}

struct ProbeRow {
    double q;
    int trial;
    double ratio;  // W^{1,q} norm amplification of the inverse
};

// numerical surrogate for the W^{1,q} operator norm of the inverse Beltrami
// operator: random band-limited right-hand sides, ratio of Sobolev norms
inline std::vector<ProbeRow> sobolev_invertibility_probe(
    const BeltramiCoefficients& coef, const std::vector<double>& q_list,
    int trials, std::uint64_t seed, double tol = 1e-10) {
    for (double q : q_list)
        if (!(1.0 < q && q < 2.0))
            throw std::invalid_argument(
                "sobolev_invertibility_probe: q must lie in (1,2)");
    const Grid& g = coef.mu.grid();
    std::vector<ProbeRow> rows;
    for (int t = 0; t < trials; ++t) {
        const GridFunction rhs = band_limited_noise(g, g.n / 8, seed + t);
        auto [w, rep] = invert_beltrami(coef, rhs, tol);
        for (double q : q_list) {
            const double num = sobolev_norm(w, 1, q);
            const double den = sobolev_norm(rhs, 1, q);
            rows.push_back({q, t, num / den});
        }
    }
    return rows;
}

}  // namespace beltrami

#endif

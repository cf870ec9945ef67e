#include <catch2/catch_amalgamated.hpp>

#include "beltrami/random.hpp"
#include "beltrami/solver.hpp"

using namespace beltrami;

namespace {

double w1inf_norm(const GridFunction& phi) {
    const double inf = std::numeric_limits<double>::infinity();
    return lp_norm(phi, inf) + lp_norm(d(phi), inf) + lp_norm(d_bar(phi), inf);
}

BeltramiCoefficients mollified_radial(double K, const Grid& g, double eps) {
    GridFunction mu = mollify(radial_stretching(K, g).mu, {eps});
    return BeltramiCoefficients::from_fields(std::move(mu), GridFunction(g));
}

// smooth plateau equal to 1 on |z| < 2.15, vanishing beyond |z| = 2.85
GridFunction plateau(const Grid& g) {
    const GridFunction chi =
        sample([](cplx z) { return cplx(std::abs(z) < 2.5 ? 1.0 : 0.0); }, g);
    return mollify(chi, {0.35});
}

}  // namespace

TEST_CASE("principal solution trivial case") {
    const Grid g = make_grid(4.0, 128, true);
    const auto zero =
        BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
    const SolutionField sol = principal_solution(zero);
    CHECK(max_abs(sol.f_remainder) == 0.0);
    CHECK(max_abs(sol.dbarf) == 0.0);
    CHECK(rel_l2_error(sol.df, sample([](cplx) { return cplx(1.0); }, g)) == 0.0);
}

TEST_CASE("principal solution matches the radial-stretching closed form") {
    double prev = 1e300;
    for (int N : {256, 512, 1024}) {
        const Grid g = make_grid(4.0, N, true);
        const RadialStretchingFields rs = radial_stretching(2.0, g);
        const auto coef =
            BeltramiCoefficients::from_fields(rs.mu, GridFunction(g));
        const SolutionField sol = principal_solution(coef, 1e-10);
        REQUIRE(sol.report.converged);
        const double err =
            rel_l2_error(sol.full_f(), rs.f_oracle, Region::central_quarter());
        CHECK(err < prev);
        prev = err;
        if (N == 1024) CHECK(err <= 0.01);
        // principal normalization: df = 1 + B(dbarf)
        CHECK(rel_l2_error(sol.df, beurling(sol.dbarf) + cplx(1.0)) <= 1e-12);
    }
}

TEST_CASE("conjugate Beltrami case mu = 0") {
    const Grid g = make_grid(4.0, 256, true);
    const GridFunction b = sample_bump(g, 1.0);
    const auto coef =
        BeltramiCoefficients::from_fields(GridFunction(g), cplx(0.5, 0.0) * b);
    const SolutionField sol = principal_solution(coef, 1e-10);
    REQUIRE(sol.report.converged);
    CHECK(l2_norm(pde_residual(sol, coef)) <= 1e-9);
    CHECK(distortion_check(sol, coef.k) <= 1e-8);
}

TEST_CASE("inhomogeneous solution") {
    const Grid g = make_grid(4.0, 256, true);
    const auto zero =
        BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));

    SECTION("coef = 0 returns the Cauchy potential") {
        const GridFunction h = band_limited_noise(g, 30, 131, /*mean_zero=*/true);
        const SolutionField sol = inhomogeneous_solution(zero, h);
        CHECK(rel_l2_error(sol.dbarf, h) == 0.0);
        CHECK(rel_l2_error(sol.f_remainder, cauchy(h)) <= 1e-14);
        CHECK(rel_l2_error(d_bar(sol.f_remainder), h) <= 1e-12);
    }

    SECTION("h = 0 gives the zero solution") {
        const SolutionField sol = inhomogeneous_solution(zero, GridFunction(g));
        CHECK(max_abs(sol.f_remainder) == 0.0);
    }

    SECTION("constructed-answer oracle") {
        const GridFunction b = sample_bump(g, 1.5);
        const auto coef = BeltramiCoefficients::from_fields(
            cplx(0.3, 0.1) * b, cplx(0.0, 0.2) * b);
        const GridFunction w0 = sample_bump(g, 1.2, cplx(0.3, -0.2));
        const GridFunction h = apply_beltrami(coef, w0);
        const SolutionField sol = inhomogeneous_solution(coef, h, 1e-11);
        REQUIRE(sol.report.converged);
        CHECK(rel_l2_error(sol.dbarf, w0) <= 1e-9);
        CHECK(l2_norm(pde_residual(sol, coef, &h)) <= 1e-9);
    }
}

TEST_CASE("localization of the identity solution") {
    const Grid g = make_grid(4.0, 256, true);
    const auto zero =
        BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
    const SolutionField sol = principal_solution(zero);
    const GridFunction h0(g);
    const Localization loc = localize(sol, zero, h0, 1.5);

    // F = psi z, H = z dbar(psi); the localized equation holds spectrally
    const GridFunction zf = sample([](cplx z) { return z; }, g);
    CHECK(rel_l2_error(loc.F, loc.psi * zf) <= 1e-14);
    CHECK(rel_l2_error(loc.H, zf * d_bar(loc.psi)) <= 1e-12);
    // limited by the spectral tail of the cutoff product psi*z at N = 256
    // (measured 4.8e-5)
    CHECK(localized_equation_residual(loc, zero) <= 2e-4);

    CHECK_THROWS_AS(localize(sol, zero, h0, 5.0), std::invalid_argument);
}

TEST_CASE("localized radial stretching satisfies the auxiliary equation") {
    const Grid g = make_grid(4.0, 1024, true);
    const auto coef = mollified_radial(2.0, g, 8 * g.spacing());
    const SolutionField sol = principal_solution(coef, 1e-10);
    REQUIRE(sol.report.converged);
    const GridFunction h0(g);
    const Localization loc = localize(sol, coef, h0, 1.5);
    CHECK(localized_equation_residual(loc, coef) <= 1e-4);
    CHECK(auxiliary_equation_residual(loc, coef) <= 1e-3);
}

TEST_CASE("beltrami_pairing vanishes for holomorphic fields") {
    const Grid g = make_grid(4.0, 512, true);
    const auto zero =
        BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
    const GridFunction taper = plateau(g);
    GridFunction f(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            f(i, j) = std::exp(g.coord(i, j)) * taper(i, j);
    const GridFunction h0(g);
    for (std::uint64_t seed : {141u, 142u, 143u}) {
        // test bumps supported inside the plateau, where f is holomorphic
        const GridFunction phi = random_test_bump(g, seed, 0.5);
        CHECK(std::abs(beltrami_pairing(f, zero, phi, h0)) <=
              1e-8 * w1inf_norm(phi));
    }
}

TEST_CASE("beltrami_pairing accepts solutions and rejects perturbations") {
    const Grid g = make_grid(4.0, 512, true);
    const auto coef = mollified_radial(2.0, g, 4 * g.spacing());
    const SolutionField sol = principal_solution(coef, 1e-10);
    REQUIRE(sol.report.converged);
    const GridFunction f = sol.full_f();
    const GridFunction h0(g);

    const GridFunction taper = plateau(g);
    GridFunction fpert = f;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            fpert(i, j) += 0.1 * std::conj(g.coord(i, j)) * taper(i, j);

    for (std::uint64_t seed : {151u, 152u, 153u}) {
        const GridFunction phi = random_test_bump(g, seed, 1.0);
        const double bound = 1e-3 * w1inf_norm(phi);
        CHECK(std::abs(beltrami_pairing(f, coef, phi, h0)) <= bound);
    }
    // deterministic real test bump senses the dbar(0.1 conj z) = 0.1 defect
    const GridFunction phi0 = sample_bump(g, 1.0);
    CHECK(std::abs(beltrami_pairing(fpert, coef, phi0, h0)) >
          10.0 * 1e-3 * w1inf_norm(phi0));
}

TEST_CASE("second derivatives") {
    const Grid g = make_grid(4.0, 256, true);

    SECTION("identity solution has vanishing second derivatives") {
        const auto zero =
            BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
        const SolutionField sol = principal_solution(zero);
        const SecondDerivatives d2 = second_derivatives(sol);
        CHECK(max_abs(d2.magnitude()) <= 1e-12);
    }

    SECTION("Cauchy potential of a Gaussian bump: dbar dbar f = dbar h") {
        const GridFunction h = sample(
            [](cplx z) { return cplx(std::exp(-4.0 * std::norm(z))); }, g);
        const GridFunction h0 = h + (-mean(h));
        const auto zero =
            BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
        const SolutionField sol = inhomogeneous_solution(zero, h0);
        const SecondDerivatives d2 = second_derivatives(sol);
        CHECK(rel_l2_error(d2.dbar_dbarf, d_bar(h0)) <= 1e-10);
    }

    SECTION("spectral consistency d(df) = B(d(dbarf))") {
        const auto coef = mollified_radial(2.0, g, 4 * g.spacing());
        const SolutionField sol = principal_solution(coef, 1e-10);
        CHECK(second_derivative_consistency(sol) <= 1e-10);
    }

    SECTION("radial stretching K=2: |ddf| has log-log slope -3/2") {
        const RadialStretching rs(2.0);
        for (int m = 2; m <= 6; ++m) {
            const double r1 = std::pow(2.0, -m), r2 = 2.0 * r1;
            const double slope =
                std::log(std::abs(rs.ddf(cplx(r1, 0.0))) /
                         std::abs(rs.ddf(cplx(r2, 0.0)))) /
                std::log(r1 / r2);
            CHECK(slope == Catch::Approx(-1.5).margin(0.1));
        }
    }
}

TEST_CASE("distortion_check") {
    const Grid g = make_grid(4.0, 256, true);
    const auto zero =
        BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
    const SolutionField id = principal_solution(zero);
    CHECK(distortion_check(id, 0.5) == Catch::Approx(-0.5).margin(1e-12));

    const auto coef = mollified_radial(2.0, g, 4 * g.spacing());
    const SolutionField sol = principal_solution(coef, 1e-10);
    CHECK(distortion_check(sol, coef.k) <= 1e-2);
}

TEST_CASE("log_derivative") {
    const Grid g = make_grid(4.0, 256, true);

    SECTION("identity solution gives zero") {
        const auto zero =
            BeltramiCoefficients::from_fields(GridFunction(g), GridFunction(g));
        const SolutionField sol = principal_solution(zero);
        CHECK(max_abs(log_derivative(sol)) <= 1e-12);
    }

    SECTION("constructed df = exp(w) recovers w") {
        const GridFunction w = sample(
            [](cplx z) { return cplx(0.3, 0.4) * bump(z, 2.0); }, g);
        SolutionField sol;
        sol.f_remainder = GridFunction(g);
        sol.dbarf = GridFunction(g);
        sol.df = GridFunction(g);
        for (std::size_t k = 0; k < w.size(); ++k) sol.df[k] = std::exp(w[k]);
        CHECK(max_abs(log_derivative(sol) - w) <= 1e-10);
    }

    SECTION("round trip on a mollified radial solution") {
        const auto coef = mollified_radial(2.0, g, 8 * g.spacing());
        const SolutionField sol = principal_solution(coef, 1e-10);
        const GridFunction lg = log_derivative(sol);
        GridFunction back(g);
        for (std::size_t k = 0; k < lg.size(); ++k) back[k] = std::exp(lg[k]);
        CHECK(rel_l2_error(back, sol.df) <= 1e-8);
    }

    SECTION("degenerate field is rejected") {
        SolutionField sol;
        sol.df = GridFunction(g);  // identically zero
        sol.f_remainder = GridFunction(g);
        sol.dbarf = GridFunction(g);
        CHECK_THROWS_AS(log_derivative(sol), std::domain_error);
    }
}

// Experiment harness for the generalized Beltrami solver: configures grids
// and coefficients, runs an experiment suite, and writes CSV/JSON/SVG
// artifacts plus a content-hash manifest.  Re-running an identical config
// reproduces byte-identical CSV/JSON outputs.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "beltrami/io.hpp"
#include "beltrami/regularity.hpp"

using nlohmann::json;
using namespace beltrami;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double L = 4.0;
    int N = 512;
    bool shifted = true;
    double tolerance = 1e-10;
    std::uint64_t seed = 1234;

    json coefficients = {{"type", "constant_bump"},
                         {"mu0", {0.3, 0.0}},
                         {"nu0", {0.0, 0.0}},
                         {"R", 1.0}};
    json experiment = {{"type", "identities"}};

    std::string output_dir = "out";
    std::set<std::string> formats = {"csv", "json"};
    bool dump_fields = false;

    json echo() const {
        json j;
        j["grid"] = {{"L", L}, {"N", N}, {"shifted", shifted}};
        j["coefficients"] = coefficients;
        j["experiment"] = experiment;
        j["tolerance"] = tolerance;
        j["seed"] = seed;
        j["output"] = {{"dir", output_dir},
                       {"formats", std::vector<std::string>(formats.begin(), formats.end())},
                       {"dump_fields", dump_fields}};
        return j;
    }
};

cplx parse_cplx(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    return cplx(j.at(0).get<double>(), j.at(1).get<double>());
}

// Collect every schema violation, not just the first.
RunConfig parse_config(const json& j, std::vector<std::string>& errors) {
    RunConfig c;
    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (g.contains("L")) c.L = g["L"].get<double>();
        if (g.contains("N")) c.N = g["N"].get<int>();
        if (g.contains("shifted")) c.shifted = g["shifted"].get<bool>();
    }
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("coefficients")) c.coefficients = j["coefficients"];
    if (j.contains("experiment")) c.experiment = j["experiment"];
    if (j.contains("output")) {
        const json& o = j["output"];
        if (o.contains("dir")) c.output_dir = o["dir"].get<std::string>();
        if (o.contains("formats")) {
            c.formats.clear();
            for (const auto& f : o["formats"]) c.formats.insert(f.get<std::string>());
        }
        if (o.contains("dump_fields")) c.dump_fields = o["dump_fields"].get<bool>();
    }

    if (!(c.L > 0.0)) errors.push_back("grid.L must be positive");
    if (c.N < 8 || !is_power_of_two(c.N))
        errors.push_back("grid.N must be a power of two, N >= 8");
    if (!(c.tolerance > 0.0)) errors.push_back("tolerance must be positive");
    for (const std::string& f : c.formats)
        if (f != "csv" && f != "json" && f != "svg")
            errors.push_back("output.formats: unknown format '" + f + "'");

    const std::string ct = c.coefficients.value("type", "");
    if (ct == "radial_stretching") {
        const double K = c.coefficients.value("K", 2.0);
        const double eps = c.coefficients.value("epsilon", 0.0);
        if (!(K >= 1.0)) errors.push_back("coefficients.K must be >= 1");
        const double h = 2.0 * c.L / c.N;
        if (eps > 0.0 && eps < 2.0 * h)
            errors.push_back("coefficients.epsilon below the 2*spacing floor (" +
                             std::to_string(2.0 * h) + ")");
        if (!c.shifted)
            errors.push_back("radial_stretching coefficients require a shifted grid");
    } else if (ct == "constant_bump") {
        const cplx mu0 = parse_cplx(c.coefficients.value("mu0", json{0.0, 0.0}));
        const cplx nu0 = parse_cplx(c.coefficients.value("nu0", json{0.0, 0.0}));
        const double R = c.coefficients.value("R", 1.0);
        if (!(std::abs(mu0) + std::abs(nu0) < 1.0))
            errors.push_back("ellipticity violated: k=" +
                             std::to_string(std::abs(mu0) + std::abs(nu0)));
        if (!(R > 0.0 && R <= c.L / 2.0))
            errors.push_back("coefficients.R must satisfy 0 < R <= L/2 (padding)");
    } else if (ct == "file") {
        for (const char* key : {"mu", "nu"}) {
            if (!c.coefficients.contains(key)) {
                errors.push_back(std::string("coefficients.") + key + " path missing");
            } else if (!std::filesystem::exists(
                           c.coefficients[key].get<std::string>())) {
                errors.push_back(std::string("coefficients.") + key +
                                 ": file not found");
            }
        }
    } else {
        errors.push_back("coefficients.type must be one of radial_stretching, "
                         "constant_bump, file");
    }

    const std::string et = c.experiment.value("type", "");
    static const std::set<std::string> known = {
        "identities", "solve", "sharpness", "thresholds", "logderiv",
        "probe-inverse"};
    if (!known.count(et))
        errors.push_back("experiment.type must be one of identities, solve, "
                         "sharpness, thresholds, logderiv, probe-inverse");
    if (et == "thresholds") {
        const int part = c.experiment.value("part", 0);
        if (part < 1 || part > 4) errors.push_back("experiment.part must be 1..4");
    }
    if (et == "logderiv") {
        const double h = 2.0 * c.L / c.N;
        for (const auto& e : c.experiment.value("epsilons", json::array()))
            if (e.get<double>() < 2.0 * h)
                errors.push_back("experiment.epsilons entry below the 2*spacing "
                                 "floor (" + std::to_string(2.0 * h) + ")");
    }
    return c;
}

BeltramiCoefficients build_coefficients(const RunConfig& c, const Grid& g) {
    const std::string ct = c.coefficients.value("type", "constant_bump");
    if (ct == "radial_stretching") {
        const double K = c.coefficients.value("K", 2.0);
        double eps = c.coefficients.value("epsilon", 0.0);
        if (eps <= 0.0) eps = 4.0 * g.spacing();
        GridFunction mu = radial_stretching(K, g).mu;
        if (K > 1.0) mu = mollify(mu, {eps});
        return BeltramiCoefficients::from_fields(std::move(mu), GridFunction(g));
    }
    if (ct == "constant_bump") {
        const cplx mu0 = parse_cplx(c.coefficients.value("mu0", json{0.0, 0.0}));
        const cplx nu0 = parse_cplx(c.coefficients.value("nu0", json{0.0, 0.0}));
        const double R = c.coefficients.value("R", 1.0);
        const GridFunction b = sample_bump(g, R);
        return BeltramiCoefficients::from_fields(mu0 * b, nu0 * b);
    }
    GridFunction mu = read_bgf1(c.coefficients["mu"].get<std::string>());
    GridFunction nu = read_bgf1(c.coefficients["nu"].get<std::string>());
    if (!(mu.grid() == nu.grid()))
        throw ConfigError("coefficient files disagree on the grid");
    return BeltramiCoefficients::from_fields(std::move(mu), std::move(nu));
}

// ---------------------------------------------------------------------------
// artifact writing

class ArtifactSink {
public:
    ArtifactSink(const RunConfig& cfg) : cfg_(cfg) {
        std::filesystem::create_directories(cfg.output_dir);
    }

    std::string path(const std::string& name) const {
        return (std::filesystem::path(cfg_.output_dir) / name).string();
    }

    void write_csv(const std::string& name,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
        if (!cfg_.formats.count("csv")) return;
        std::ofstream os(path(name), std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path(name));
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << row[i];
            os << "\n";
        }
        record(name);
    }

    void write_json(const std::string& name, const json& j) {
        if (!cfg_.formats.count("json") && name != "manifest.json") return;
        std::ofstream os(path(name), std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path(name));
        os << j.dump(2) << "\n";
        record(name);
    }

    void write_svg(const std::string& name, const std::string& body) {
        if (!cfg_.formats.count("svg")) return;
        std::ofstream os(path(name), std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path(name));
        os << body;
        record(name);
    }

    void write_field(const std::string& name, const GridFunction& f) {
        write_bgf1(f, path(name));
        record(name);
    }

    void record(const std::string& name) { produced_.push_back(name); }

    void finalize(const json& csv_schemas) {
        json manifest;
        manifest["config"] = cfg_.echo();
        manifest["seed"] = cfg_.seed;
        manifest["csv_schemas"] = csv_schemas;
        json files = json::array();
        for (const std::string& name : produced_) {
            const std::string p = path(name);
            char hex[32];
            std::snprintf(hex, sizeof hex, "%016" PRIx64, fnv1a_file(p));
            files.push_back({{"name", name},
                             {"bytes", std::filesystem::file_size(p)},
                             {"fnv1a64", hex}});
        }
        manifest["files"] = files;
        write_json("manifest.json", manifest);
    }

private:
    const RunConfig& cfg_;
    std::vector<std::string> produced_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// minimal log-log / semilog polyline plot; presentation only
std::string svg_plot(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::string& xlabel, const std::string& ylabel,
                     bool logx, bool logy) {
    const int W = 640, H = 480, M = 60;
    auto tx = [&](double v) { return logx ? std::log10(v) : v; };
    auto ty = [&](double v) { return logy ? std::log10(std::max(v, 1e-300)) : v; };
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x0 = std::min(x0, tx(xs[i])); x1 = std::max(x1, tx(xs[i]));
        y0 = std::min(y0, ty(ys[i])); y1 = std::max(y1, ty(ys[i]));
    }
    if (x1 <= x0) x1 = x0 + 1;
    if (y1 <= y0) y1 = y0 + 1;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
                    "height=\"480\">\n<rect width=\"640\" height=\"480\" "
                    "fill=\"white\"/>\n<polyline fill=\"none\" stroke=\"steelblue\" "
                    "stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double px = M + (tx(xs[i]) - x0) / (x1 - x0) * (W - 2 * M);
        const double py = H - M - (ty(ys[i]) - y0) / (y1 - y0) * (H - 2 * M);
        s += fmt(px) + "," + fmt(py) + " ";
    }
    s += "\"/>\n<text x=\"320\" y=\"470\" text-anchor=\"middle\">" + xlabel +
         "</text>\n<text x=\"15\" y=\"240\" transform=\"rotate(-90 15 240)\" "
         "text-anchor=\"middle\">" + ylabel + "</text>\n</svg>\n";
    return s;
}

// ---------------------------------------------------------------------------
// experiments

int run_identities(const RunConfig& cfg, const Grid& g, ArtifactSink& sink,
                   json& schemas) {
    std::vector<std::vector<std::string>> rows;
    const int fields = 20;
    for (int t = 0; t < fields; ++t) {
        const GridFunction f = band_limited_noise(g, g.n / 8, cfg.seed + t);
        const GridFunction gfun = band_limited_noise(g, g.n / 8, cfg.seed + 1000 + t);
        const GridFunction f0 = f - mean(f) * GridFunction(g, cplx(1.0));
        auto push = [&](const char* name, double resid) {
            rows.push_back({std::to_string(t), name, fmt(resid)});
        };
        push("BBstar_identity", rel_l2_error(beurling_star(beurling(f)), f));
        push("B_dbar_equals_d", rel_l2_error(beurling(d_bar(f)), d(f)));
        push("isometry", std::abs(l2_norm(beurling(f)) - l2_norm(f)) / l2_norm(f));
        push("adjoint",
             std::abs(inner_real(beurling(f), gfun) -
                      inner_real(f, beurling_star(gfun))) /
                 (l2_norm(f) * l2_norm(gfun)));
        push("conjugation",
             rel_l2_error(conj_beurling(f), beurling_star(conj(f))));
        push("cauchy_inverts_dbar", rel_l2_error(d_bar(cauchy(f0)), f0));
    }
    sink.write_csv("identities.csv", {"field", "identity", "residual"}, rows);
    schemas["identities.csv"] = "field,identity,residual";
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, std::stod(r[2]));
    sink.write_json("identities.json", {{"fields", fields}, {"max_residual", worst}});
    return kExitOk;
}

int run_solve(const RunConfig& cfg, const Grid& g, ArtifactSink& sink,
              json& schemas) {
    const BeltramiCoefficients coef = build_coefficients(cfg, g);
    const SolutionField sol = principal_solution(coef, cfg.tolerance);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < sol.report.residuals.size(); ++i)
        rows.push_back({std::to_string(i), fmt(sol.report.residuals[i])});
    sink.write_csv("residuals.csv", {"iteration", "residual_l2"}, rows);
    schemas["residuals.csv"] = "iteration,residual_l2";

    json rep;
    rep["converged"] = sol.report.converged;
    rep["iterations"] = sol.report.iterations;
    rep["k"] = coef.k;
    rep["final_residual"] = sol.report.residuals.back();
    rep["pde_residual_l2"] = l2_norm(pde_residual(sol, coef));
    rep["distortion_check"] = distortion_check(sol, coef.k);
    sink.write_json("solve.json", rep);

    if (cfg.dump_fields) {
        sink.write_field("f_remainder.bgf", sol.f_remainder);
        sink.write_field("df.bgf", sol.df);
        sink.write_field("dbarf.bgf", sol.dbarf);
        json side;
        side["normalization"] =
            sol.normalization == Normalization::principal ? "principal"
                                                          : "cauchy_potential";
        side["iterations"] = sol.report.iterations;
        side["residuals"] = sol.report.residuals;
        side["converged"] = sol.report.converged;
        sink.write_json("fields.json", side);
    }
    if (!sol.report.residuals.empty()) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < sol.report.residuals.size(); ++i) {
            xs.push_back(static_cast<double>(i + 1));
            ys.push_back(sol.report.residuals[i]);
        }
        sink.write_svg("residuals.svg",
                       svg_plot(xs, ys, "iteration", "residual", false, true));
    }
    return sol.report.converged ? kExitOk : kExitNonConvergence;
}

int run_sharpness(const RunConfig& cfg, const Grid& g, ArtifactSink& sink,
                  json& schemas) {
    const double K = cfg.coefficients.value("K", 2.0);
    const double predicted = 2.0 * K / (2.0 * K - 1.0);
    const Region region = Region::disk(1.0);

    // quantile-based window: spans the power-law range of the singular tail
    // independent of the grid resolution
    auto quantile_window = [&](const GridFunction& field) {
        std::vector<double> mags;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (region.contains(g, i, j))
                    mags.push_back(std::abs(field(i, j)));
        std::sort(mags.begin(), mags.end());
        const auto at = [&](double q) {
            return mags[static_cast<std::size_t>(q * (mags.size() - 1))];
        };
        return LambdaWindow{at(0.75), at(0.995)};
    };

    const RadialStretchingFields rs = radial_stretching(K, g);
    std::vector<std::vector<std::string>> rows;
    auto push_fit = [&](const char* source, const GridFunction& field) {
        const TailFit fit = tail_exponent(field, region, quantile_window(field));
        rows.push_back({source, fmt(fit.p_hat), fmt(predicted), fmt(fit.r2),
                        std::to_string(fit.points), fmt(fit.decades)});
        return fit;
    };
    push_fit("oracle", rs.ddf_oracle);

    const BeltramiCoefficients coef = build_coefficients(cfg, g);
    const SolutionField sol = principal_solution(coef, cfg.tolerance);
    const SecondDerivatives d2 = second_derivatives(sol);
    push_fit("solver", d2.magnitude());

    sink.write_csv("sharpness.csv",
                   {"source", "tail_exponent", "predicted", "r2", "points",
                    "decades"},
                   rows);
    schemas["sharpness.csv"] = "source,tail_exponent,predicted,r2,points,decades";
    if (!sol.report.converged) return kExitNonConvergence;
    return kExitOk;
}

int run_thresholds(const RunConfig& cfg, const Grid&, ArtifactSink& sink,
                   json& schemas) {
    ThresholdQuery q;
    q.K = cfg.experiment.value("K", 2.0);
    q.p = cfg.experiment.value("p", 2.0);
    q.r = cfg.experiment.value("r", 1.2);
    q.part = static_cast<TheoremPart>(cfg.experiment.value("part", 2));
    const ExponentSet set = threshold_predict(q);
    json out;
    out["K"] = q.K;
    out["p"] = q.p;
    out["r"] = q.r;
    out["part"] = static_cast<int>(q.part);
    out["s_star"] = set.s_star;
    out["description"] = set.describe();
    sink.write_json("thresholds.json", out);
    sink.write_csv("thresholds.csv", {"K", "p", "r", "part", "s_star"},
                   {{fmt(q.K), fmt(q.p), fmt(q.r),
                     std::to_string(static_cast<int>(q.part)), fmt(set.s_star)}});
    schemas["thresholds.csv"] = "K,p,r,part,s_star";
    return kExitOk;
}

int run_logderiv(const RunConfig& cfg, const Grid& g, ArtifactSink& sink,
                 json& schemas) {
    const double K = cfg.experiment.value("K", 2.0);
    const double p = cfg.experiment.value("p", 1.8);
    std::vector<double> eps;
    if (cfg.experiment.contains("epsilons"))
        for (const auto& e : cfg.experiment["epsilons"]) eps.push_back(e.get<double>());
    else
        eps = {4.0 * g.spacing(), 8.0 * g.spacing(), 16.0 * g.spacing()};
    const auto rows = log_derivative_experiment(K, p, eps, g,
                                                Region::disk(0.75), cfg.tolerance);
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
        out.push_back({fmt(r.epsilon), fmt(r.seminorm_logdf),
                       fmt(r.seminorm_coef), fmt(r.ratio)});
    sink.write_csv("logderiv.csv",
                   {"epsilon", "seminorm_log_df", "seminorm_coef", "ratio"}, out);
    schemas["logderiv.csv"] = "epsilon,seminorm_log_df,seminorm_coef,ratio";
    return kExitOk;
}

int run_probe(const RunConfig& cfg, const Grid& g, ArtifactSink& sink,
              json& schemas) {
    std::vector<double> qs;
    if (cfg.experiment.contains("q"))
        for (const auto& q : cfg.experiment["q"]) qs.push_back(q.get<double>());
    else
        qs = {1.5, 1.8, 1.95};
    const int trials = cfg.experiment.value("trials", 5);
    const BeltramiCoefficients coef = build_coefficients(cfg, g);
    const auto rows =
        sobolev_invertibility_probe(coef, qs, trials, cfg.seed, cfg.tolerance);
    std::vector<std::vector<std::string>> out;
    std::map<double, double> max_ratio;
    for (const auto& r : rows) {
        out.push_back({fmt(r.q), std::to_string(r.trial), fmt(r.ratio)});
        max_ratio[r.q] = std::max(max_ratio[r.q], r.ratio);
    }
    sink.write_csv("probe_inverse.csv", {"q", "trial", "ratio"}, out);
    schemas["probe_inverse.csv"] = "q,trial,ratio";
    json summary;
    for (const auto& [q, m] : max_ratio) summary[fmt(q)] = m;
    sink.write_json("probe_inverse.json", summary);
    return kExitOk;
}

json load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read config file: " + path);
    json j;
    is >> j;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral laboratory for the generalized Beltrami equation"};
    app.require_subcommand(1);

    std::string config_path, output_dir, formats_csv;
    std::optional<int> grid_n;
    std::optional<double> grid_l, tol;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--output", output_dir, "output directory");
        sub->add_option("--grid-n", grid_n, "override grid resolution N");
        sub->add_option("--grid-l", grid_l, "override half-side length L");
        sub->add_option("--tol", tol, "override solver tolerance");
        sub->add_option("--seed", seed, "override RNG seed");
        sub->add_option("--formats", formats_csv, "comma-separated: csv,json,svg");
    };
    CLI::App* validate = app.add_subcommand("validate", "check and echo a config");
    CLI::App* run = app.add_subcommand("run", "run the configured experiment");
    add_common(validate);
    add_common(run);

    CLI11_PARSE(app, argc, argv);

    json raw = json::object();
    try {
        if (!config_path.empty()) raw = load_config_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "E_IO: " << e.what() << "\n";
        return kExitIo;
    }

    std::vector<std::string> errors;
    RunConfig cfg = parse_config(raw, errors);
    // flags override file values
    if (grid_n) cfg.N = *grid_n;
    if (grid_l) cfg.L = *grid_l;
    if (tol) cfg.tolerance = *tol;
    if (seed) cfg.seed = *seed;
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (!formats_csv.empty()) {
        cfg.formats.clear();
        std::stringstream ss(formats_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) cfg.formats.insert(tok);
    }
    if (grid_n && (cfg.N < 8 || !is_power_of_two(cfg.N)))
        errors.push_back("grid.N must be a power of two, N >= 8");

    if (validate->parsed()) {
        if (!errors.empty()) {
            for (const std::string& e : errors) std::cerr << "E_CONFIG: " << e << "\n";
            return kExitConfig;
        }
        std::cout << cfg.echo().dump(2) << "\n";
        return kExitOk;
    }

    if (!errors.empty()) {
        std::cerr << "E_CONFIG: " << errors.front();
        if (errors.size() > 1)
            std::cerr << " (+" << errors.size() - 1 << " more; run validate)";
        std::cerr << "\n";
        return kExitConfig;
    }

    try {
        const Grid g = make_grid(cfg.L, cfg.N, cfg.shifted);
        ArtifactSink sink(cfg);
        json schemas = json::object();
        const std::string et = cfg.experiment.value("type", "identities");
        int rc = kExitOk;
        if (et == "identities") rc = run_identities(cfg, g, sink, schemas);
        else if (et == "solve") rc = run_solve(cfg, g, sink, schemas);
        else if (et == "sharpness") rc = run_sharpness(cfg, g, sink, schemas);
        else if (et == "thresholds") rc = run_thresholds(cfg, g, sink, schemas);
        else if (et == "logderiv") rc = run_logderiv(cfg, g, sink, schemas);
        else if (et == "probe-inverse") rc = run_probe(cfg, g, sink, schemas);
        sink.finalize(schemas);
        return rc;
    } catch (const ConfigError& e) {
        std::cerr << "E_CONFIG: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "E_CONFIG: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "E_IO: " << e.what() << "\n";
        return kExitIo;
    }
}

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diskgeo/circles.hpp"
#include "diskgeo/io.hpp"
#include "diskgeo/metrics.hpp"
#include "diskgeo/mobius.hpp"
#include "diskgeo/verify.hpp"
#include "figures.hpp"

namespace {

using namespace diskgeo;
using Json = nlohmann::ordered_json;

// Exit codes: 1 suite failure, 2 parse error, 3 domain violation,
// 4 unwritable output.
struct ExitWith {
    int code;
    std::string message;
};

Complex parse_complex_flag(const std::string& text) {
    try {
        return parse_complex(text);
    } catch (const Error& e) {
        throw ExitWith{2, e.what()};
    }
}

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void write_or_exit4(const std::string& path, const std::string& content) {
    try {
        figures::write_file(path, content);
    } catch (const Error& e) {
        throw ExitWith{4, e.what()};
    }
}

// ---------------------------------------------------------------- metric ----

int run_metric(const std::string& a_text, const std::string& b_text,
               const std::string& domain, const std::string& polygon_file, bool json_out) {
    const Complex a = parse_complex_flag(a_text);
    const Complex b = parse_complex_flag(b_text);
    Json out;
    out["domain"] = domain;
    out["a"] = figures::complex_json(a);
    out["b"] = figures::complex_json(b);

    if (domain == "disk") {
        const DiskPoint pa(a), pb(b);
        const bool same = std::abs(a - b) <= kCoincidentTol;
        const double m = same ? 0.0 : chord_offset(pa, pb);
        const double rho = rho_disk(pa, pb);
        const double h = hilbert_disk(pa, pb);
        const double v = visual_angle_disk(pa, pb);
        const double res_sh =
            std::abs(std::sinh(h / 2.0) -
                     std::sqrt((1.0 - m) * (1.0 + m)) * std::sinh(rho / 2.0));
        const double res_tan = std::abs(std::tan(v / 2.0) -
                                        std::sqrt((1.0 + m) / (1.0 - m)) * std::tanh(h / 4.0));
        out["rho"] = rho;
        out["hilbert"] = h;
        out["visual_angle"] = v;
        out["m"] = m;
        out["residual_sh_identity"] = res_sh;
        out["residual_tan_identity"] = res_tan;
        if (json_out) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "rho                  = " << fmt6(rho) << "\n"
                      << "hilbert              = " << fmt6(h) << "\n"
                      << "visual_angle         = " << fmt6(v) << "\n"
                      << "m                    = " << fmt6(m) << "\n"
                      << "residual_sh_identity = " << fmt6(res_sh) << "\n"
                      << "residual_tan_identity= " << fmt6(res_tan) << "\n";
        }
        return 0;
    }
    if (domain == "halfplane") {
        const double rho = rho_halfplane(HalfPlanePoint(a), HalfPlanePoint(b));
        out["rho"] = rho;
        if (json_out) std::cout << out.dump(2) << "\n";
        else          std::cout << "rho = " << fmt6(rho) << "\n";
        return 0;
    }
    if (domain == "polygon") {
        if (polygon_file.empty()) throw ExitWith{2, "metric: --polygon-file required"};
        const ConvexPolygon poly = read_polygon_file(polygon_file);
        const double h = hilbert_polygon(poly, a, b);
        out["hilbert"] = h;
        if (json_out) std::cout << out.dump(2) << "\n";
        else          std::cout << "hilbert = " << fmt6(h) << "\n";
        return 0;
    }
    throw ExitWith{2, "metric: unknown domain '" + domain + "'"};
}

// ---------------------------------------------------------------- circle ----

int run_circle(const std::string& z0_text, double t, const std::string& out_path) {
    const Complex z0 = parse_complex_flag(z0_text);
    const figures::FigureOutput fig = figures::circle_tangent(z0, t);
    std::cout << fig.sidecar.dump(2) << "\n";
    if (!out_path.empty()) {
        write_or_exit4(out_path, fig.svg);
        write_or_exit4(out_path + ".json", fig.sidecar.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------- verify ----

Json suite_json(const verify::SuiteResult& r, double duration_ms) {
    Json j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    j["tolerance"] = r.tolerance;
    j["max_violation"] = r.max_violation;
    j["seed"] = r.seed;
    j["duration_ms"] = duration_ms;
    j["status"] = r.pass() ? "pass" : "fail";
    j["artifacts"] = r.artifacts;
    return j;
}

int run_verify(const std::string& suite, std::uint64_t seed, long n,
               const std::string& out_path) {
    if (n < 1) throw ExitWith{2, "verify: --n must be positive"};
    std::vector<verify::SuiteResult> results;
    Json report = Json::array();
    bool all_pass = true;
    try {
        results = verify::run_group(suite, seed, n);
        for (const auto& r : results) {
            report.push_back(suite_json(r, r.duration_ms));
            all_pass = all_pass && r.pass();
            if (!r.pass() && !r.worst_case.empty())
                std::cerr << r.suite << " failed; worst case: " << r.worst_case << "\n";
        }
    } catch (const UnknownSuite& e) {
        throw ExitWith{2, e.what()};
    }
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) write_or_exit4(out_path, report.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- figure ----

int run_figure(const std::string& kind, const std::string& z0_text, double t,
               double re, const std::string& radius_pair, int count, double w,
               const std::string& t_decades, int per_decade,
               const std::string& polygon_file, const std::string& center_text,
               const std::string& out_path) {
    if (out_path.empty()) throw ExitWith{3, "figure: --out required"};

    figures::FigureOutput fig;
    try {
        if (kind == "hilbert-circle-tangent") {
            fig = figures::circle_tangent(parse_complex_flag(z0_text), t);
        } else if (kind == "circle-family") {
            double p = 0.0, q = 0.0;
            if (std::sscanf(radius_pair.c_str(), "%lf,%lf", &p, &q) != 2)
                throw ExitWith{3, "figure: --radius-pair expects 'p,q'"};
            fig = figures::circle_family(re, p, q, count);
        } else if (kind == "sharpness-plot") {
            int lo = 0, hi = 0;
            if (std::sscanf(t_decades.c_str(), "%d:%d", &lo, &hi) != 2)
                throw ExitWith{3, "figure: --t-decades expects 'lo:hi'"};
            fig = figures::sharpness_plot(w, lo, hi, per_decade);
        } else if (kind == "polygon-ball") {
            if (polygon_file.empty()) throw ExitWith{3, "figure: --polygon-file required"};
            fig = figures::polygon_ball(read_polygon_file(polygon_file),
                                        parse_complex_flag(center_text), t);
        } else {
            throw ExitWith{3, "figure: unknown kind '" + kind + "'"};
        }
    } catch (const Error& e) {
        throw ExitWith{3, e.what()};
    }

    write_or_exit4(out_path, fig.svg);
    write_or_exit4(out_path + ".json", fig.sidecar.dump(2) + "\n");
    std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
    return 0;
}

// --------------------------------------------------------------- polygon ----

int run_polygon(const std::string& file, const std::string& a_text,
                const std::string& b_text, const std::string& ball_center_text,
                double ball_t, const std::string& out_path, bool json_out) {
    const ConvexPolygon poly = read_polygon_file(file);

    if (!a_text.empty() && !b_text.empty()) {
        const Complex a = parse_complex_flag(a_text);
        const Complex b = parse_complex_flag(b_text);
        const double h = hilbert_polygon(poly, a, b);
        if (json_out) {
            Json out;
            out["a"] = figures::complex_json(a);
            out["b"] = figures::complex_json(b);
            out["hilbert"] = h;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "hilbert = " << fmt6(h) << "\n";
        }
        return 0;
    }
    if (!ball_center_text.empty()) {
        if (out_path.empty()) throw ExitWith{3, "polygon: --out required for the ball figure"};
        const figures::FigureOutput fig =
            figures::polygon_ball(poly, parse_complex_flag(ball_center_text), ball_t);
        write_or_exit4(out_path, fig.svg);
        write_or_exit4(out_path + ".json", fig.sidecar.dump(2) + "\n");
        std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
        return 0;
    }
    throw ExitWith{2, "polygon: provide either --a/--b or --ball-center"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic, Hilbert, and visual angle metrics of the unit disk"};
    app.require_subcommand(1);

    // metric
    auto* metric = app.add_subcommand("metric", "Distances between two points");
    std::string m_a, m_b, m_domain = "disk", m_polygon_file;
    bool m_json = false;
    metric->add_option("--a", m_a, "First point, e.g. 0.5+0.1i")->required();
    metric->add_option("--b", m_b, "Second point")->required();
    metric->add_option("--domain", m_domain, "disk|halfplane|polygon");
    metric->add_option("--polygon-file", m_polygon_file, "Polygon vertex file");
    metric->add_flag("--json", m_json, "JSON output");

    // circle
    auto* circle = app.add_subcommand("circle", "Hilbert circle as an ellipse");
    std::string c_z0, c_out;
    double c_t = 1.0;
    circle->add_option("--z0", c_z0, "Center")->required();
    circle->add_option("--t", c_t, "Hilbert radius")->required();
    circle->add_option("--out", c_out, "SVG output path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run certification suites");
    std::string v_suite = "all", v_out;
    std::uint64_t v_seed = diskgeo::verify::kDefaultSeed;
    long v_n = diskgeo::verify::kDefaultSamples;
    verify_cmd->add_option("--suite", v_suite,
                           "all|identities|ellipse|tangency|config|distortion|polygon");
    verify_cmd->add_option("--seed", v_seed, "Random seed");
    verify_cmd->add_option("--n", v_n, "Sample count for the random sweeps");
    verify_cmd->add_option("--out", v_out, "Also write the JSON report here");

    // figure
    auto* figure = app.add_subcommand("figure", "Deterministic SVG figures");
    std::string f_kind, f_z0 = "0", f_radius_pair = "0.6,0.68", f_decades = "2:4";
    std::string f_polygon_file, f_center = "0", f_out;
    double f_t = 1.0, f_re = 0.6, f_w = 0.9;
    int f_count = 8, f_per_decade = 4;
    figure->add_option("--kind", f_kind,
                       "hilbert-circle-tangent|circle-family|sharpness-plot|polygon-ball")
        ->required();
    figure->add_option("--z0", f_z0, "Center (hilbert-circle-tangent)");
    figure->add_option("--t", f_t, "Hilbert radius");
    figure->add_option("--re", f_re, "Real part of the family segment");
    figure->add_option("--radius-pair", f_radius_pair, "p,q defining the radius");
    figure->add_option("--count", f_count, "Number of family members");
    figure->add_option("--w", f_w, "Automorphism parameter");
    figure->add_option("--t-decades", f_decades, "lo:hi range of -log10 t");
    figure->add_option("--per-decade", f_per_decade, "Samples per decade");
    figure->add_option("--polygon-file", f_polygon_file, "Polygon vertex file");
    figure->add_option("--center", f_center, "Ball center (polygon-ball)");
    figure->add_option("--out", f_out, "SVG output path");

    // polygon
    auto* polygon = app.add_subcommand("polygon", "Hilbert metric in a convex polygon");
    std::string p_file, p_a, p_b, p_ball_center, p_out;
    double p_ball_t = 1.0;
    bool p_json = false;
    polygon->add_option("--file", p_file, "Polygon vertex file")->required();
    polygon->add_option("--a", p_a, "First point");
    polygon->add_option("--b", p_b, "Second point");
    polygon->add_option("--ball-center", p_ball_center, "Hilbert ball center");
    polygon->add_option("--ball-t", p_ball_t, "Hilbert ball radius");
    polygon->add_option("--out", p_out, "SVG output path");
    polygon->add_flag("--json", p_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (metric->parsed())
            return run_metric(m_a, m_b, m_domain, m_polygon_file, m_json);
        if (circle->parsed()) return run_circle(c_z0, c_t, c_out);
        if (verify_cmd->parsed()) return run_verify(v_suite, v_seed, v_n, v_out);
        if (figure->parsed())
            return run_figure(f_kind, f_z0, f_t, f_re, f_radius_pair, f_count, f_w,
                              f_decades, f_per_decade, f_polygon_file, f_center, f_out);
        if (polygon->parsed())
            return run_polygon(p_file, p_a, p_b, p_ball_center, p_ball_t, p_out, p_json);
    } catch (const ExitWith& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        // Library-level validation: domain violations.
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}

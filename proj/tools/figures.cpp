#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include "svg.hpp"

#include "diskgeo/circles.hpp"
#include "diskgeo/metrics.hpp"
#include "diskgeo/mobius.hpp"
#include "diskgeo/oracles.hpp"

namespace figures {

using namespace diskgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

Json ellipse_json(const HilbertEllipse& e) {
    Json j;
    j["center"] = complex_json(e.center);
    j["semi_radial"] = e.semi_radial;
    j["semi_transverse"] = e.semi_transverse;
    j["orientation"] = e.orientation;
    return j;
}

Json disk_json(const EuclideanDisk& d) {
    Json j;
    j["center"] = complex_json(d.center);
    j["radius"] = d.radius;
    return j;
}

Complex json_complex(const Json& j) { return Complex(j["re"], j["im"]); }

}  // namespace

Json complex_json(Complex z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

FigureOutput circle_tangent(Complex z0c, double t) {
    const DiskPoint z0(z0c);
    const HilbertEllipse e = hilbert_circle(z0, t);
    const double s_out = circumscribed_radius(z0, t);

    Json side;
    side["kind"] = "hilbert-circle-tangent";
    side["z0"] = complex_json(z0c);
    side["t"] = t;
    side["ellipse"] = ellipse_json(e);
    side["inscribed"] = Json{{"radius_metric", inscribed_radius(z0, t)},
                             {"disk", disk_json(hyperbolic_disk_euclidean(z0, t))}};
    side["circumscribed"] = Json{{"radius_metric", s_out},
                                 {"disk", disk_json(hyperbolic_disk_euclidean(z0, s_out))}};

    svgout::Canvas canvas;
    canvas.circle(Complex(0, 0), 1.0, "black", 2.0);
    const Json& in_disk = side["inscribed"]["disk"];
    const Json& out_disk = side["circumscribed"]["disk"];
    canvas.circle(json_complex(out_disk["center"]), out_disk["radius"], "#2a9d2a", 2.0, "8 6");
    canvas.ellipse(json_complex(side["ellipse"]["center"]), side["ellipse"]["semi_radial"],
                   side["ellipse"]["semi_transverse"], side["ellipse"]["orientation"],
                   "#1f4fd0", 3.0);
    canvas.circle(json_complex(in_disk["center"]), in_disk["radius"], "#d02a2a", 2.0);
    canvas.dot(json_complex(side["z0"]), "black");
    return FigureOutput{canvas.str(), std::move(side)};
}

FigureOutput circle_family(double re, double p, double q, int count) {
    if (count < 1) throw Error("circle family: count must be positive");
    if (std::abs(re) >= 1.0) throw Error("circle family: |re| >= 1");
    const double t = hilbert_disk(DiskPoint(p, 0.0), DiskPoint(q, 0.0));
    const double rho = rho_disk(DiskPoint(p, 0.0), DiskPoint(q, 0.0));
    const double y_max = std::sqrt(1.0 - re * re);

    Json side;
    side["kind"] = "circle-family";
    side["re"] = re;
    side["radius_pair"] = Json::array({p, q});
    side["hilbert_radius"] = t;
    side["hyperbolic_radius"] = rho;
    side["count"] = count;
    side["items"] = Json::array();
    for (int j = 0; j < count; ++j) {
        const DiskPoint c(re, y_max * j / count);
        Json item;
        item["center"] = complex_json(c.value());
        item["ellipse"] = ellipse_json(hilbert_circle(c, t));
        item["inscribed_disk"] = disk_json(hyperbolic_disk_euclidean(c, rho));
        side["items"].push_back(std::move(item));
    }

    svgout::Canvas canvas;
    canvas.circle(Complex(0, 0), 1.0, "black", 2.0);
    for (const Json& item : side["items"]) {
        canvas.ellipse(json_complex(item["ellipse"]["center"]), item["ellipse"]["semi_radial"],
                       item["ellipse"]["semi_transverse"], item["ellipse"]["orientation"],
                       "#1f4fd0", 2.5);
        canvas.circle(json_complex(item["inscribed_disk"]["center"]),
                      item["inscribed_disk"]["radius"], "#d02a2a", 1.5);
        canvas.dot(json_complex(item["center"]), "black", 3.0);
    }
    return FigureOutput{canvas.str(), std::move(side)};
}

FigureOutput sharpness_plot(double w, int decade_lo, int decade_hi, int per_decade) {
    if (decade_lo < 1 || decade_hi <= decade_lo)
        throw Error("sharpness plot: decades must satisfy 1 <= lo < hi");
    if (per_decade < 1) throw Error("sharpness plot: per_decade must be positive");

    std::vector<double> ts;
    for (int k = 0; k <= (decade_hi - decade_lo) * per_decade; ++k)
        ts.push_back(std::pow(10.0, -(decade_lo + static_cast<double>(k) / per_decade)));
    const auto sweep = sharpness_sweep(w, ts);

    Json side;
    side["kind"] = "sharpness-plot";
    side["w"] = w;
    side["decades"] = Json::array({decade_lo, decade_hi});
    side["samples"] = Json::array();
    for (const auto& s : sweep)
        side["samples"].push_back(Json{{"t", s.t}, {"m", s.m}, {"quotient", s.quotient}});

    // Plot frame in raw pixels: log10(t) across, quotient up.
    const double x0 = 140, x1 = 940, y0 = 880, y1 = 120;
    double q_min = 1.0;
    for (const auto& s : sweep) q_min = std::min(q_min, s.quotient);
    // Keep a nonzero vertical span even when every quotient rounds to 1.
    const double q_lo = std::min(q_min - 0.05 * (1.0 - q_min), 1.0 - 1e-12);
    const auto X = [&](double t) {
        return x0 + (x1 - x0) * (std::log10(t) + decade_hi) / (decade_hi - decade_lo);
    };
    const auto Y = [&](double q) { return y0 + (y1 - y0) * (q - q_lo) / (1.0 - q_lo); };

    svgout::Canvas canvas;
    canvas.line_px(x0, y0, x1, y0, "black", 2.0);
    canvas.line_px(x0, y0, x0, y1, "black", 2.0);
    canvas.line_px(x0, Y(1.0), x1, Y(1.0), "#999999", 1.0);
    canvas.text_px(x1 - 220, y0 + 40, "log10 t");
    canvas.text_px(x0 - 120, y1 - 20, "lhs/rhs");
    canvas.text_px(x0 - 120, Y(1.0) + 8, "1");
    canvas.text_px(x0 - 130, y0 + 8, svgout::num(q_lo));
    for (int d = decade_lo; d <= decade_hi; ++d) {
        const double x = X(std::pow(10.0, -d));
        canvas.line_px(x, y0, x, y0 + 10, "black", 2.0);
        canvas.text_px(x - 20, y0 + 40, "-" + std::to_string(d));
    }
    std::vector<std::pair<double, double>> pts;
    for (const Json& s : side["samples"])
        pts.emplace_back(X(s["t"]), Y(s["quotient"]));
    canvas.polyline_px(pts, "#1f4fd0", 3.0);
    return FigureOutput{canvas.str(), std::move(side)};
}

FigureOutput polygon_ball(const ConvexPolygon& poly, Complex center, double t) {
    if (!poly.contains(center)) throw PointOutsidePolygon("polygon ball: center outside polygon");
    if (!(t > 0.0)) throw InvalidRadius("polygon ball: t <= 0");

    Json side;
    side["kind"] = "polygon-ball";
    side["center"] = complex_json(center);
    side["t"] = t;
    side["polygon"] = Json::array();
    for (const Complex& v : poly.vertices()) side["polygon"].push_back(complex_json(v));
    side["points"] = Json::array();
    for (int k = 0; k < 360; ++k) {
        const Complex dir = std::polar(1.0, 2.0 * kPi * k / 360.0);
        side["points"].push_back(complex_json(oracles::polygon_ray_point(poly, center, dir, t)));
    }

    // Fit the polygon into the viewport.
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const Complex& v : poly.vertices()) {
        lo_x = std::min(lo_x, v.real()); hi_x = std::max(hi_x, v.real());
        lo_y = std::min(lo_y, v.imag()); hi_y = std::max(hi_y, v.imag());
    }
    const Complex mid(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y));
    const double scale = 1.9 / std::max(hi_x - lo_x, hi_y - lo_y);
    const auto fit = [&](const Json& j) { return (json_complex(j) - mid) * scale; };

    svgout::Canvas canvas;
    std::vector<Complex> outline;
    for (const Json& v : side["polygon"]) outline.push_back(fit(v));
    canvas.polyline(outline, "black", 2.0, /*closed=*/true);
    std::vector<Complex> ball;
    for (const Json& p : side["points"]) ball.push_back(fit(p));
    canvas.polyline(ball, "#1f4fd0", 2.5, /*closed=*/true);
    canvas.dot((center - mid) * scale, "black");
    return FigureOutput{canvas.str(), std::move(side)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed to write '" + path + "'");
}

}  // namespace figures

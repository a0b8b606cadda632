#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "diskgeo/geometry.hpp"

namespace svgout {

using diskgeo::Complex;

inline std::string num(double x) {
    if (x == 0.0) return "0";  // avoid "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

/// Deterministic SVG 1.1 document on a 1000x1000 viewBox. Disk coordinates
/// map the unit disk to the center 900x900 square with the y axis flipped to
/// mathematical orientation; _px overloads take raw pixel coordinates.
class Canvas {
public:
    Canvas() {
        body_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
              << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                 "viewBox=\"0 0 1000 1000\">\n"
              << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    }

    static double px(double x) { return 500.0 + 450.0 * x; }
    static double py(double y) { return 500.0 - 450.0 * y; }

    void circle(Complex center, double radius, const std::string& stroke,
                double width = 2.0, const std::string& dash = "") {
        body_ << "<circle cx=\"" << num(px(center.real())) << "\" cy=\""
              << num(py(center.imag())) << "\" r=\"" << num(450.0 * radius)
              << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
              << num(width) << "\"";
        if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
        body_ << "/>\n";
    }

    void ellipse(Complex center, double rx, double ry, double rotation_rad,
                 const std::string& stroke, double width = 2.0) {
        const double cx = px(center.real());
        const double cy = py(center.imag());
        // Flipped y axis turns a counterclockwise rotation into a negative
        // SVG rotation angle.
        const double deg = -rotation_rad * 180.0 / 3.14159265358979323846;
        body_ << "<ellipse cx=\"0\" cy=\"0\" rx=\"" << num(450.0 * rx) << "\" ry=\""
              << num(450.0 * ry) << "\" fill=\"none\" stroke=\"" << stroke
              << "\" stroke-width=\"" << num(width) << "\" transform=\"translate("
              << num(cx) << " " << num(cy) << ") rotate(" << num(deg) << ")\"/>\n";
    }

    void polyline(const std::vector<Complex>& pts, const std::string& stroke,
                  double width = 2.0, bool closed = false) {
        body_ << (closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\""
              << stroke << "\" stroke-width=\"" << num(width) << "\" points=\"";
        for (const Complex& p : pts)
            body_ << num(px(p.real())) << "," << num(py(p.imag())) << " ";
        body_ << "\"/>\n";
    }

    void dot(Complex center, const std::string& fill, double radius_px = 4.0) {
        body_ << "<circle cx=\"" << num(px(center.real())) << "\" cy=\""
              << num(py(center.imag())) << "\" r=\"" << num(radius_px)
              << "\" fill=\"" << fill << "\"/>\n";
    }

    void line_px(double x1, double y1, double x2, double y2,
                 const std::string& stroke, double width = 1.0) {
        body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
              << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
              << "\" stroke-width=\"" << num(width) << "\"/>\n";
    }

    void polyline_px(const std::vector<std::pair<double, double>>& pts,
                     const std::string& stroke, double width = 2.0) {
        body_ << "<polyline fill=\"none\" stroke=\"" << stroke
              << "\" stroke-width=\"" << num(width) << "\" points=\"";
        for (const auto& [x, y] : pts) body_ << num(x) << "," << num(y) << " ";
        body_ << "\"/>\n";
    }

    void text_px(double x, double y, const std::string& s, int size = 24) {
        body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y)
              << "\" font-family=\"monospace\" font-size=\"" << size << "\">" << s
              << "</text>\n";
    }

    std::string str() const { return body_.str() + "</svg>\n"; }

private:
    std::ostringstream body_;
};

}  // namespace svgout

#pragma once

#include <string>

#include "json.hpp"

#include "diskgeo/geometry.hpp"

namespace figures {

using Json = nlohmann::ordered_json;

/// Rendered figure plus the sidecar carrying every number the drawing used.
/// The renderers consume only sidecar values, so the sidecar doubles as a
/// golden record of the figure content.
struct FigureOutput {
    std::string svg;
    Json sidecar;
};

Json complex_json(diskgeo::Complex z);

/// Unit circle, Hilbert circle ellipse, and its inscribed and circumscribed
/// hyperbolic circles.
FigureOutput circle_tangent(diskgeo::Complex z0, double t);

/// Family of Hilbert circles with centers on the vertical segment Re z = re,
/// all with Hilbert radius h(p, q), plus the inscribed hyperbolic circles of
/// radius rho(p, q).
FigureOutput circle_family(double re, double p, double q, int count);

/// Quotient of the distortion inequality sides for f = T_w against log10(t),
/// t sweeping the given decades.
FigureOutput sharpness_plot(double w, int decade_lo, int decade_hi, int per_decade = 4);

/// Hilbert ball boundary polyline inside a convex polygon, sampled along 360
/// rays from the center.
FigureOutput polygon_ball(const diskgeo::ConvexPolygon& poly, diskgeo::Complex center, double t);

/// Writes content to path; throws diskgeo::Error if the file cannot be
/// opened for writing.
void write_file(const std::string& path, const std::string& content);

}  // namespace figures

#pragma once

// Deterministic SVG line plots of sampled curves with equal x/y scaling.

#include <string>
#include <vector>

#include "curvrec/geometry.hpp"

namespace curvrec {

struct PlotCurve {
    SampledCurve curve;
    std::string label;
};

struct PlotSpec {
    std::vector<PlotCurve> curves;
    int width{640};
    int height{640};
    double margin{32.0};
    double stroke_width{1.5};
    bool equal_aspect{true};
    std::string title;
};

/// Data-to-pixel map: px = offset_x + scale_x x, py = offset_y + scale_y y (scale_y < 0).
struct PlotTransform {
    double scale_x;
    double scale_y;
    double offset_x;
    double offset_y;

    [[nodiscard]] Point2 apply(const Point2& p) const { return {offset_x + scale_x * p.x, offset_y + scale_y * p.y}; }
};

/// Throws std::invalid_argument for an empty plot, IoError for a zero-area bounding box.
[[nodiscard]] PlotTransform plot_transform(const PlotSpec& spec);
[[nodiscard]] std::string render_svg(const PlotSpec& spec);
void emit_svg(const PlotSpec& spec, const std::string& path);

}  // namespace curvrec

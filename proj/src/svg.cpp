#include "curvrec/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

#include "curvrec/errors.hpp"
#include "curvrec/io.hpp"

namespace curvrec {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d4820a", "#444444"};
constexpr double kLegendRow = 18.0;
constexpr double kMinStep = 0.25;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    // Avoid "-0.000" so equal inputs always print equally.
    if (std::string_view(buf) == "-0.000") {
        return "0.000";
    }
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::size_t labelled(const PlotSpec& spec) {
    return static_cast<std::size_t>(
        std::count_if(spec.curves.begin(), spec.curves.end(), [](const PlotCurve& c) { return !c.label.empty(); }));
}

}  // namespace

PlotTransform plot_transform(const PlotSpec& spec) {
    if (spec.curves.empty()) {
        throw std::invalid_argument("plot: no curves");
    }
    double xmin = spec.curves.front().curve.front().x;
    double xmax = xmin;
    double ymin = spec.curves.front().curve.front().y;
    double ymax = ymin;
    for (const auto& c : spec.curves) {
        for (const auto& p : c.curve.points()) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double dx = xmax - xmin;
    const double dy = ymax - ymin;
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw IoError("plot: bounding box has zero area");
    }
    const double legend = kLegendRow * static_cast<double>(labelled(spec));
    const double top = spec.margin + (spec.title.empty() ? 0.0 : kLegendRow);
    const double avail_w = spec.width - 2.0 * spec.margin;
    const double avail_h = spec.height - top - spec.margin - legend;
    if (!(avail_w > 0.0) || !(avail_h > 0.0)) {
        throw std::invalid_argument("plot: canvas too small for margins and legend");
    }
    double sx = avail_w / dx;
    double sy = avail_h / dy;
    if (spec.equal_aspect) {
        sx = sy = std::min(sx, sy);
    }
    PlotTransform t{};
    t.scale_x = sx;
    t.scale_y = -sy;
    t.offset_x = spec.margin + 0.5 * (avail_w - sx * dx) - sx * xmin;
    t.offset_y = top + 0.5 * (avail_h - sy * dy) + sy * ymax;
    return t;
}

std::string render_svg(const PlotSpec& spec) {
    const PlotTransform tr = plot_transform(spec);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" fill=\"white\"/>\n";
    if (!spec.title.empty()) {
        out += "<text x=\"" + fmt(spec.width / 2.0) + "\" y=\"" + fmt(spec.margin) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(spec.title) +
               "</text>\n";
    }
    out += "<g class=\"curves\" fill=\"none\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
    for (std::size_t k = 0; k < spec.curves.size(); ++k) {
        // Points closer than a quarter pixel to the last emitted one add nothing visible.
        const auto& pts = spec.curves[k].curve.points();
        std::string d;
        Point2 last{};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point2 q = tr.apply(pts[i]);
            if (i > 0 && i + 1 < pts.size() && norm(q - last) < kMinStep) {
                continue;
            }
            d += d.empty() ? "M" : " L";
            d += fmt(q.x) + "," + fmt(q.y);
            last = q;
        }
        out += "<path d=\"" + d + "\" stroke=\"" + kPalette[k % kPalette.size()] + "\" stroke-width=\"" +
               fmt(spec.stroke_width) + "\"/>\n";
    }
    out += "</g>\n";
    if (labelled(spec) > 0) {
        out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
        double y = spec.height - spec.margin - kLegendRow * static_cast<double>(labelled(spec)) + 12.0;
        for (std::size_t k = 0; k < spec.curves.size(); ++k) {
            if (spec.curves[k].label.empty()) {
                continue;
            }
            const std::string x0 = fmt(spec.margin);
            out += "<line x1=\"" + x0 + "\" y1=\"" + fmt(y - 4.0) + "\" x2=\"" + fmt(spec.margin + 24.0) +
                   "\" y2=\"" + fmt(y - 4.0) + "\" stroke=\"" + kPalette[k % kPalette.size()] +
                   "\" stroke-width=\"2\"/>\n";
            out += "<text x=\"" + fmt(spec.margin + 30.0) + "\" y=\"" + fmt(y) + "\">" +
                   escape(spec.curves[k].label) + "</text>\n";
            y += kLegendRow;
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void emit_svg(const PlotSpec& spec, const std::string& path) { write_text_file(path, render_svg(spec)); }

}  // namespace curvrec

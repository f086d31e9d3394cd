#include "rankrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace rankrange {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string stroke_attrs(const Stroke& s) {
    std::string out = "stroke=\"" + s.color + "\" stroke-width=\"" + num(s.width) + "\"";
    if (s.opacity < 1.0) out += " stroke-opacity=\"" + num(s.opacity) + "\"";
    return out + " vector-effect=\"non-scaling-stroke\"";
}

std::string point_list(std::span<const cplx> pts) {
    std::string out;
    for (const cplx& z : pts) {
        if (!out.empty()) out += ' ';
        out += num(z.real()) + ',' + num(-z.imag());
    }
    return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, bool equal_aspect)
    : title_(std::move(title)), equal_aspect_(equal_aspect) {}

void SvgPlot::extend(cplx z) {
    if (!any_) {
        xmin_ = xmax_ = z.real();
        ymin_ = ymax_ = z.imag();
        any_ = true;
        return;
    }
    xmin_ = std::min(xmin_, z.real());
    xmax_ = std::max(xmax_, z.real());
    ymin_ = std::min(ymin_, z.imag());
    ymax_ = std::max(ymax_, z.imag());
}

void SvgPlot::closed_path(std::span<const cplx> points, const Stroke& stroke,
                          const std::string& fill) {
    for (const cplx& z : points) extend(z);
    body_.push_back("<polygon points=\"" + point_list(points) + "\" fill=\"" + fill + "\" " +
                    stroke_attrs(stroke) + "/>");
}

void SvgPlot::polyline(std::span<const cplx> points, const Stroke& stroke) {
    for (const cplx& z : points) extend(z);
    body_.push_back("<polyline points=\"" + point_list(points) + "\" fill=\"none\" " +
                    stroke_attrs(stroke) + "/>");
}

void SvgPlot::circle(cplx center, double radius, const Stroke& stroke) {
    extend(center + cplx(radius, radius));
    extend(center - cplx(radius, radius));
    body_.push_back("<circle cx=\"" + num(center.real()) + "\" cy=\"" + num(-center.imag()) +
                    "\" r=\"" + num(radius) + "\" fill=\"none\" " + stroke_attrs(stroke) + "/>");
}

void SvgPlot::dot(cplx at, const std::string& color) {
    extend(at);
    // Radius is fixed later relative to the view size.
    body_.push_back("<circle cx=\"" + num(at.real()) + "\" cy=\"" + num(-at.imag()) +
                    "\" r=\"@DOT@\" fill=\"" + color + "\"/>");
}

void SvgPlot::label(cplx at, const std::string& text) {
    extend(at);
    labels_.emplace_back(at, text);
}

void SvgPlot::region(const ConvexRegion& r, const Stroke& stroke, const std::string& fill) {
    const auto& v = r.vertices();
    switch (r.kind()) {
        case RegionKind::empty: break;
        case RegionKind::point: dot(v[0], stroke.color); break;
        case RegionKind::segment: polyline(v, stroke); break;
        case RegionKind::polygon: closed_path(v, stroke, fill); break;
    }
}

std::string SvgPlot::str() const {
    double x0 = any_ ? xmin_ : -1.0, x1 = any_ ? xmax_ : 1.0;
    double y0 = any_ ? ymin_ : -1.0, y1 = any_ ? ymax_ : 1.0;
    double w = std::max(x1 - x0, 1e-9);
    double h = std::max(y1 - y0, 1e-9);
    if (equal_aspect_) {
        const double side = std::max(w, h);
        x0 -= 0.5 * (side - w);
        y0 -= 0.5 * (side - h);
        w = h = side;
    }
    x0 -= 0.1 * w;
    y0 -= 0.1 * h;
    w *= 1.2;
    h *= 1.2;

    const double px_w = 600.0;
    const double px_h = equal_aspect_ ? 600.0 : 400.0;
    const double font = 0.035 * std::max(w, h);
    const std::string dot_r = num(0.008 * std::max(w, h));

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(px_w) + "\" height=\"" +
           num(px_h) + "\" viewBox=\"" + num(x0) + ' ' + num(-(y0 + h)) + ' ' + num(w) + ' ' +
           num(h) + "\"" + (equal_aspect_ ? "" : " preserveAspectRatio=\"none\"") + ">\n";
    if (!title_.empty()) out += "<title>" + xml_escape(title_) + "</title>\n";
    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(-(y0 + h)) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"white\"/>\n";
    if (axes_) {
        const Stroke axis{"#888888", 0.75, 1.0};
        if (y0 <= 0.0 && 0.0 <= y0 + h) {
            out += "<line x1=\"" + num(x0) + "\" y1=\"0\" x2=\"" + num(x0 + w) + "\" y2=\"0\" " +
                   stroke_attrs(axis) + "/>\n";
        }
        if (x0 <= 0.0 && 0.0 <= x0 + w) {
            out += "<line x1=\"0\" y1=\"" + num(-(y0 + h)) + "\" x2=\"0\" y2=\"" + num(-y0) + "\" " +
                   stroke_attrs(axis) + "/>\n";
        }
    }
    for (std::string line : body_) {
        if (const auto at = line.find("@DOT@"); at != std::string::npos) line.replace(at, 5, dot_r);
        out += line + '\n';
    }
    for (const auto& [at, text] : labels_) {
        out += "<text x=\"" + num(at.real()) + "\" y=\"" + num(-at.imag()) + "\" font-size=\"" +
               num(font) + "\" font-family=\"sans-serif\">" + xml_escape(text) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string region_svg(const ConvexRegion& region, const std::string& title) {
    SvgPlot plot(title);
    plot.axes();
    plot.circle(0.0, 1.0, Stroke{"#3366cc", 1.0, 0.8});
    plot.region(region, Stroke{"black", 2.0, 1.0}, "#dddddd");
    return plot.str();
}

std::string compression_cover_svg(std::span<const ConvexRegion> compression_ranges,
                                  const ConvexRegion& range, const std::string& title) {
    SvgPlot plot(title);
    plot.axes();
    for (const auto& f : compression_ranges) plot.region(f, Stroke{"#999999", 0.5, 0.6});
    plot.circle(0.0, 1.0, Stroke{"#3366cc", 1.0, 1.0});
    plot.region(range, Stroke{"black", 2.5, 1.0});
    return plot.str();
}

std::string trace_svg(const ConvergenceTrace& trace) {
    SvgPlot plot("convergence of q_nu and t_nu", false);
    std::vector<cplx> q;
    std::vector<cplx> t;
    for (const auto& rec : trace.records) {
        if (!std::isfinite(rec.q)) continue;
        q.emplace_back(static_cast<double>(rec.nu), rec.q);
        t.emplace_back(static_cast<double>(rec.nu), rec.t);
    }
    const double last = q.empty() ? 1.0 : q.back().real();
    if (trace.range.radii) {
        const std::vector<cplx> rk{cplx(1.0, trace.range.radii->outer),
                                   cplx(last, trace.range.radii->outer)};
        const std::vector<cplx> rtk{cplx(1.0, trace.range.radii->inner),
                                    cplx(last, trace.range.radii->inner)};
        plot.polyline(rk, Stroke{"#cc3333", 1.0, 0.7});
        plot.polyline(rtk, Stroke{"#3366cc", 1.0, 0.7});
    }
    if (q.size() > 1) {
        plot.polyline(q, Stroke{"#cc3333", 2.0, 1.0});
        plot.polyline(t, Stroke{"#3366cc", 2.0, 1.0});
    } else {
        for (const cplx& z : q) plot.dot(z, "#cc3333");
        for (const cplx& z : t) plot.dot(z, "#3366cc");
    }
    if (!q.empty()) {
        plot.label(q.back(), "q");
        plot.label(t.back(), "t");
    }
    return plot.str();
}

}  // namespace rankrange

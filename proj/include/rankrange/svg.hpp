#pragma once

#include <span>
#include <string>
#include <vector>

#include "rankrange/compressions.hpp"
#include "rankrange/convex.hpp"

namespace rankrange {

struct Stroke {
    std::string color = "black";
    double width = 1.0;  // screen pixels
    double opacity = 1.0;
};

/// Minimal SVG writer in world coordinates. The viewBox is the bounding box
/// of everything drawn, padded by 10% on each side; y points up.
class SvgPlot {
public:
    explicit SvgPlot(std::string title = {}, bool equal_aspect = true);

    void closed_path(std::span<const cplx> points, const Stroke& stroke,
                     const std::string& fill = "none");
    void polyline(std::span<const cplx> points, const Stroke& stroke);
    void circle(cplx center, double radius, const Stroke& stroke);
    void dot(cplx at, const std::string& color);
    /// Draws the coordinate axes across the final bounding box.
    void axes(bool enabled = true) { axes_ = enabled; }
    void label(cplx at, const std::string& text);

    /// Draws a region as a path, segment or dot.
    void region(const ConvexRegion& r, const Stroke& stroke, const std::string& fill = "none");

    std::string str() const;

private:
    void extend(cplx z);

    std::string title_;
    bool equal_aspect_;
    bool axes_ = false;
    std::vector<std::string> body_;
    std::vector<std::pair<cplx, std::string>> labels_;
    double xmin_ = 0.0, xmax_ = 0.0, ymin_ = 0.0, ymax_ = 0.0;
    bool any_ = false;
};

/// Region with axes and the unit circle.
std::string region_svg(const ConvexRegion& region, const std::string& title);

/// Compression numerical range boundaries (light) under the rank-k range
/// (heavy), plus the unit circle.
std::string compression_cover_svg(std::span<const ConvexRegion> compression_ranges,
                                  const ConvexRegion& range, const std::string& title);

/// q_nu and t_nu against nu with reference lines r_k and r~_k.
std::string trace_svg(const ConvergenceTrace& trace);

}  // namespace rankrange

#pragma once

// Minimal SVG writer with a fixed data-to-pixel map.

#include <sstream>
#include <string>

namespace reebkit {

class SvgCanvas {
public:
    /// Pixel size and the data window [xmin, xmax] x [ymin, ymax] (y up).
    SvgCanvas(int width, int height, double xmin, double xmax, double ymin, double ymax);

    void circle(double x, double y, double radius_px, const std::string& fill, double opacity = 1);
    /// Circle with data-space radius, stroked only.
    void ring(double x, double y, double radius, const std::string& stroke);
    void line(double x0, double y0, double x1, double y1, const std::string& stroke, double width_px = 1,
              double opacity = 1);
    void text(double x, double y, const std::string& s, int size_px = 12);

    std::string str() const;

private:
    double px(double x) const;
    double py(double y) const;

    int width_, height_;
    double xmin_, xmax_, ymin_, ymax_;
    std::ostringstream body_;
};

} // namespace reebkit

#include "reebkit/svg.hpp"

#include <cstdio>

namespace reebkit {

namespace {

std::string f3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

SvgCanvas::SvgCanvas(int width, int height, double xmin, double xmax, double ymin, double ymax)
    : width_(width), height_(height), xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {}

double SvgCanvas::px(double x) const { return (x - xmin_) / (xmax_ - xmin_) * width_; }
double SvgCanvas::py(double y) const { return (ymax_ - y) / (ymax_ - ymin_) * height_; }

void SvgCanvas::circle(double x, double y, double radius_px, const std::string& fill, double opacity) {
    body_ << "<circle cx=\"" << f3(px(x)) << "\" cy=\"" << f3(py(y)) << "\" r=\"" << f3(radius_px) << "\" fill=\""
          << fill << "\" fill-opacity=\"" << f3(opacity) << "\"/>\n";
}

void SvgCanvas::ring(double x, double y, double radius, const std::string& stroke) {
    body_ << "<ellipse cx=\"" << f3(px(x)) << "\" cy=\"" << f3(py(y)) << "\" rx=\"" << f3(px(x + radius) - px(x))
          << "\" ry=\"" << f3(py(y - radius) - py(y)) << "\" fill=\"none\" stroke=\"" << stroke << "\"/>\n";
}

void SvgCanvas::line(double x0, double y0, double x1, double y1, const std::string& stroke, double width_px,
                     double opacity) {
    body_ << "<line x1=\"" << f3(px(x0)) << "\" y1=\"" << f3(py(y0)) << "\" x2=\"" << f3(px(x1)) << "\" y2=\""
          << f3(py(y1)) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << f3(width_px) << "\" stroke-opacity=\""
          << f3(opacity) << "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& s, int size_px) {
    body_ << "<text x=\"" << f3(px(x)) << "\" y=\"" << f3(py(y)) << "\" font-family=\"sans-serif\" font-size=\""
          << size_px << "\">" << escape(s) << "</text>\n";
}

std::string SvgCanvas::str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
       << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
}

} // namespace reebkit

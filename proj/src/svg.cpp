#include "bisis/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bisis {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 60, kRight = 20, kTop = 34, kBottom = 46;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string xlabel, std::string ylabel,
                 double xmin, double xmax, double ymin, double ymax)
    : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)),
      xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {
    if (!(xmax_ > xmin_)) xmax_ = xmin_ + 1.0;
    if (!(ymax_ > ymin_)) ymax_ = ymin_ + 1.0;
}

double SvgPlot::sx(double x) const {
    return kLeft + (x - xmin_) / (xmax_ - xmin_) * (kWidth - kLeft - kRight);
}

double SvgPlot::sy(double y) const {
    return kHeight - kBottom - (y - ymin_) / (ymax_ - ymin_) * (kHeight - kTop - kBottom);
}

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& pts,
                       const std::string& color, double width, bool dashed) {
    if (pts.size() < 2) return;
    std::ostringstream os;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(width)
       << "\"";
    if (dashed) os << " stroke-dasharray=\"6,4\"";
    os << " points=\"";
    // Thin dense trajectories; the plot stays faithful at 2000 vertices.
    const std::size_t max_pts = 2000;
    const std::size_t stride = pts.size() > max_pts ? pts.size() / max_pts + 1 : 1;
    for (std::size_t k = 0; k < pts.size(); k += stride)
        os << num(sx(pts[k].first)) << ',' << num(sy(pts[k].second)) << ' ';
    os << num(sx(pts.back().first)) << ',' << num(sy(pts.back().second));
    os << "\"/>";
    body_.push_back(os.str());
}

void SvgPlot::marker(double x, double y, const std::string& color, const std::string& shape) {
    const double px = sx(x), py = sy(y);
    std::ostringstream os;
    if (shape == "cross") {
        os << "<path d=\"M" << num(px - 5) << ' ' << num(py - 5) << " L" << num(px + 5) << ' '
           << num(py + 5) << " M" << num(px - 5) << ' ' << num(py + 5) << " L" << num(px + 5)
           << ' ' << num(py - 5) << "\" stroke=\"" << color << "\" stroke-width=\"1.8\"/>";
    } else {
        os << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py)
           << "\" r=\"3.5\" fill=\"" << color << "\"/>";
    }
    body_.push_back(os.str());
}

void SvgPlot::legend_entry(const std::string& label, const std::string& color) {
    legend_.emplace_back(label, color);
}

std::string SvgPlot::str() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">"
       << title_ << "</text>\n";

    // Axes box and ticks.
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
       << "\" height=\"" << kHeight - kTop - kBottom
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        const double xv = xmin_ + (xmax_ - xmin_) * k / 5;
        const double yv = ymin_ + (ymax_ - ymin_) * k / 5;
        os << "<line x1=\"" << num(sx(xv)) << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
           << num(sx(xv)) << "\" y2=\"" << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(sx(xv)) << "\" y=\"" << kHeight - kBottom + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << num(xv) << "</text>\n";
        os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(sy(yv)) << "\" x2=\"" << kLeft
           << "\" y2=\"" << num(sy(yv)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(sy(yv) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << num(yv) << "</text>\n";
    }
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel_ << "</text>\n";
    os << "<text x=\"16\" y=\"" << kHeight / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
       << kHeight / 2 << ")\">" << ylabel_ << "</text>\n";

    for (const auto& el : body_) os << el << '\n';

    double ly = kTop + 14;
    for (const auto& [label, color] : legend_) {
        os << "<line x1=\"" << kWidth - 150 << "\" y1=\"" << ly << "\" x2=\"" << kWidth - 128
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << kWidth - 122 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
           << label << "</text>\n";
        ly += 16;
    }
    os << "</svg>\n";
    return os.str();
}

void SvgPlot::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << str();
}

}  // namespace bisis

#ifndef BISIS_SVG_HPP
#define BISIS_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace bisis {

/// Minimal deterministic SVG line-plot writer: fixed canvas, linear axes
/// with ticks, polylines and point markers. Output bytes depend only on the
/// data passed in.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel,
            double xmin, double xmax, double ymin, double ymax);

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& color, double width = 1.2, bool dashed = false);
    void marker(double x, double y, const std::string& color, const std::string& shape = "cross");
    void legend_entry(const std::string& label, const std::string& color);

    std::string str() const;
    void write_file(const std::string& path) const;

private:
    double sx(double x) const;
    double sy(double y) const;

    std::string title_, xlabel_, ylabel_;
    double xmin_, xmax_, ymin_, ymax_;
    std::vector<std::string> body_;
    std::vector<std::pair<std::string, std::string>> legend_;
};

}  // namespace bisis

#endif  // BISIS_SVG_HPP

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrlens {

// Minimal SVG canvas: line plots, bar charts and grid heatmaps, no external
// renderer. Output contains no timestamps so identical inputs give identical
// bytes.
class SvgCanvas {
public:
    SvgCanvas(int width, int height);

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& stroke = "none");
    void line(double x1, double y1, double x2, double y2, const std::string& color,
              double width = 1.0);
    void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                  const std::string& color, double width = 1.5);
    void text(double x, double y, const std::string& s, int size = 11,
              const std::string& anchor = "start", const std::string& color = "#222222");
    void save(const std::string& path) const;

    int width() const { return width_; }
    int height() const { return height_; }

private:
    int width_, height_;
    std::string body_;
};

struct Series {
    std::string label;
    std::vector<double> x, y;
    std::string color;
};

struct PlotBox {
    double x = 0, y = 0, w = 320, h = 220;
    std::string title, x_label, y_label;
    bool legend = true;
};

void render_line_plot(SvgCanvas& svg, const PlotBox& box, const std::vector<Series>& series);

// values indexed [row][col]; cells with NaN render grey.
void render_heatmap(SvgCanvas& svg, const PlotBox& box, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels,
                    const std::vector<std::vector<double>>& values);

void render_bars(SvgCanvas& svg, const PlotBox& box, const std::vector<std::string>& labels,
                 const std::vector<double>& values, const std::vector<std::string>& colors);

// Stable per-method plot color.
std::string method_color(const std::string& method);

} // namespace lrlens

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace arbor::svg {

inline constexpr double kWidth = 800;
inline constexpr double kHeight = 600;

std::string escape(std::string_view text);
/// Fixed two-decimal coordinates keep the byte stream stable.
std::string num(double v);

struct Style {
    std::string stroke = "none";
    std::string fill = "none";
    double stroke_width = 1.0;
    std::string dash;   // stroke-dasharray, empty for solid
    double opacity = 1.0;
};

/// Minimal SVG document with a fixed 800x600 viewBox and 12px sans text.
class Document {
public:
    void line(double x1, double y1, double x2, double y2, const Style& style);
    void rect(double x, double y, double w, double h, const Style& style);
    void circle(double cx, double cy, double r, const Style& style);
    void polyline(const std::vector<std::array<double, 2>>& points, const Style& style, bool closed = false);
    void text(double x, double y, std::string_view content, std::string_view anchor = "start",
              double rotate = 0.0, std::string_view fill = "#000000");
    void comment(std::string_view content);

    std::string str() const;

private:
    std::string body_;
};

/// Linear map from a data interval onto a pixel interval.
struct Scale {
    double d0 = 0, d1 = 1, p0 = 0, p1 = 1;
    double operator()(double v) const {
        if (d1 == d0) return 0.5 * (p0 + p1);
        return p0 + (v - d0) / (d1 - d0) * (p1 - p0);
    }
};

/// Roughly `target` round-valued ticks covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 5);
std::string tick_label(double v);

struct Frame {
    double left, top, width, height;
    double right() const { return left + width; }
    double bottom() const { return top + height; }
};

/// Draws the panel box, tick marks with labels, and axis titles.
void draw_axes(Document& doc, const Frame& frame, const Scale& x, const Scale& y, const std::vector<double>& xticks,
               const std::vector<double>& yticks, std::string_view xlabel, std::string_view ylabel);

/// Panel frames laid out `ncol` per row inside the canvas.
std::vector<Frame> panel_grid(std::size_t panels, std::size_t ncol, double top_margin = 30);

std::string palette(std::size_t index);
/// Blue-to-yellow ramp for t in [0, 1].
std::string ramp(double t);

}  // namespace arbor::svg

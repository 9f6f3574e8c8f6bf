#include "arbor/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace arbor::svg {

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

namespace {

std::string style_attrs(const Style& s) {
    std::string out = " stroke=\"" + s.stroke + "\" fill=\"" + s.fill + "\"";
    if (s.stroke != "none") out += " stroke-width=\"" + num(s.stroke_width) + "\"";
    if (!s.dash.empty()) out += " stroke-dasharray=\"" + s.dash + "\"";
    if (s.opacity < 1.0) out += " opacity=\"" + num(s.opacity) + "\"";
    return out;
}

}  // namespace

void Document::line(double x1, double y1, double x2, double y2, const Style& style) {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\"" +
             style_attrs(style) + "/>\n";
}

void Document::rect(double x, double y, double w, double h, const Style& style) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(std::max(0.0, w)) + "\" height=\"" +
             num(std::max(0.0, h)) + "\"" + style_attrs(style) + "/>\n";
}

void Document::circle(double cx, double cy, double r, const Style& style) {
    body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\"" + style_attrs(style) + "/>\n";
}

void Document::polyline(const std::vector<std::array<double, 2>>& points, const Style& style, bool closed) {
    if (points.empty()) return;
    std::string pts;
    for (const auto& p : points) {
        if (!pts.empty()) pts.push_back(' ');
        pts += num(p[0]) + "," + num(p[1]);
    }
    body_ += std::string(closed ? "<polygon" : "<polyline") + " points=\"" + pts + "\"" + style_attrs(style) + "/>\n";
}

void Document::text(double x, double y, std::string_view content, std::string_view anchor, double rotate,
                    std::string_view fill) {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + std::string(anchor) + "\"";
    if (fill != "#000000") body_ += " fill=\"" + std::string(fill) + "\"";
    if (rotate != 0.0) body_ += " transform=\"rotate(" + num(rotate) + " " + num(x) + " " + num(y) + ")\"";
    body_ += ">" + escape(content) + "</text>\n";
}

void Document::comment(std::string_view content) { body_ += "<!-- " + escape(content) + " -->\n"; }

std::string Document::str() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\" "
           "font-family=\"sans-serif\" font-size=\"12px\">\n"
           "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n" +
           body_ + "</svg>\n";
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) return {};
    if (hi < lo) std::swap(lo, hi);
    if (hi == lo) return {lo};
    const double raw = (hi - lo) / std::max(1, target);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step)
        ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    return ticks;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void draw_axes(Document& doc, const Frame& f, const Scale& x, const Scale& y, const std::vector<double>& xticks,
               const std::vector<double>& yticks, std::string_view xlabel, std::string_view ylabel) {
    const Style axis{"#333333", "none", 1.0, "", 1.0};
    doc.rect(f.left, f.top, f.width, f.height, axis);
    for (double t : xticks) {
        const double px = x(t);
        doc.line(px, f.bottom(), px, f.bottom() + 4, axis);
        doc.text(px, f.bottom() + 16, tick_label(t), "middle");
    }
    for (double t : yticks) {
        const double py = y(t);
        doc.line(f.left - 4, py, f.left, py, axis);
        doc.text(f.left - 6, py + 4, tick_label(t), "end");
    }
    if (!xlabel.empty()) doc.text(f.left + f.width / 2, f.bottom() + 32, xlabel, "middle");
    if (!ylabel.empty()) doc.text(f.left - 44, f.top + f.height / 2, ylabel, "middle", -90);
}

std::vector<Frame> panel_grid(std::size_t panels, std::size_t ncol, double top_margin) {
    std::vector<Frame> frames;
    if (panels == 0) return frames;
    ncol = std::min(ncol, panels);
    const std::size_t nrow = (panels + ncol - 1) / ncol;
    const double left_margin = 60, right_margin = 10, bottom_margin = 30;
    const double cell_w = (kWidth - left_margin - right_margin) / static_cast<double>(ncol);
    const double cell_h = (kHeight - top_margin - bottom_margin) / static_cast<double>(nrow);
    for (std::size_t k = 0; k < panels; ++k) {
        const double cx = left_margin + cell_w * static_cast<double>(k % ncol);
        const double cy = top_margin + cell_h * static_cast<double>(k / ncol);
        frames.push_back({cx + 30, cy + 18, cell_w - 40, cell_h - 42});
    }
    return frames;
}

std::string palette(std::size_t index) {
    static const char* colors[] = {"#E41A1C", "#377EB8", "#4DAF4A", "#984EA3", "#FF7F00",
                                   "#A65628", "#F781BF", "#999999", "#66C2A5"};
    return colors[index % (sizeof colors / sizeof colors[0])];
}

std::string ramp(double t) {
    static const std::array<std::array<double, 3>, 5> stops{{{76, 0, 255}, {0, 128, 255}, {0, 229, 128},
                                                             {200, 240, 0}, {255, 224, 100}}};
    t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
    const double s = t * (stops.size() - 1);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(s), stops.size() - 2);
    const double u = s - static_cast<double>(k);
    char buf[8];
    int c[3];
    for (int ch = 0; ch < 3; ++ch)
        c[ch] = static_cast<int>(std::lround(stops[k][ch] + u * (stops[k + 1][ch] - stops[k][ch])));
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", c[0], c[1], c[2]);
    return buf;
}

}  // namespace arbor::svg

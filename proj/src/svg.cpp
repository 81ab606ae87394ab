#include "excessd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "excessd/format.hpp"

namespace excessd {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

void text(std::string& svg, double x, double y, const std::string& anchor, int size,
          const std::string& body, const std::string& extra = "") {
    svg += "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor +
           "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) + "\"" + extra +
           ">" + body + "</text>\n";
}

void line(std::string& svg, double x1, double y1, double x2, double y2,
          const std::string& style) {
    svg += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\" " + style + "/>\n";
}

}  // namespace

std::string bar_chart_svg(const std::string& title, const std::vector<BarItem>& items) {
    const double margin_left = 60.0;
    const double margin_right = 20.0;
    const double margin_top = 50.0;
    const double margin_bottom = 50.0;
    const double bar_width = 26.0;
    const double gap = 10.0;
    const double inner_h = 360.0;
    const double width = margin_left + items.size() * (bar_width + gap) + margin_right;
    const double height = margin_top + inner_h + margin_bottom;

    double max_value = 0.0;
    for (const BarItem& item : items) max_value = std::max(max_value, item.value);
    if (max_value <= 0.0) max_value = 1.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
    text(svg, width / 2.0, 24.0, "middle", 16, title, " font-weight=\"bold\"");
    line(svg, margin_left, margin_top + inner_h, width - margin_right, margin_top + inner_h,
         "stroke=\"#000000\" stroke-width=\"1\"");

    double x = margin_left + gap / 2.0;
    for (const BarItem& item : items) {
        const double h = item.value <= 0.0 ? 0.0 : inner_h * item.value / max_value;
        const double y = margin_top + inner_h - h;
        svg += "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(bar_width) +
               "\" height=\"" + num(h) + "\" fill=\"#4878a8\"/>\n";
        text(svg, x + bar_width / 2.0, y - 4.0, "middle", 8, format_scientific3(item.value));
        text(svg, x + bar_width / 2.0, margin_top + inner_h + 16.0, "middle", 10, item.label);
        x += bar_width + gap;
    }
    svg += "</svg>\n";
    return svg;
}

std::string line_chart_svg(const std::string& title, int start_year,
                           const std::vector<double>& values,
                           const std::vector<ForecastPoint>& forecasts) {
    const double margin_left = 80.0;
    const double margin_right = 30.0;
    const double margin_top = 50.0;
    const double margin_bottom = 50.0;
    const double inner_w = 480.0;
    const double inner_h = 320.0;
    const double width = margin_left + inner_w + margin_right;
    const double height = margin_top + inner_h + margin_bottom;

    double lo = values.empty() ? 0.0 : values[0];
    double hi = lo;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    int last_year = start_year + static_cast<int>(values.size()) - 1;
    for (const ForecastPoint& f : forecasts) {
        lo = std::min(lo, f.lower);
        hi = std::max(hi, f.upper);
        last_year = std::max(last_year, f.year);
    }
    if (hi <= lo) hi = lo + 1.0;
    const double pad = 0.06 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double span_years = std::max(1, last_year - start_year);
    auto sx = [&](double year) {
        return margin_left + inner_w * (year - start_year) / span_years;
    };
    auto sy = [&](double v) { return margin_top + inner_h * (1.0 - (v - lo) / (hi - lo)); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
    text(svg, width / 2.0, 24.0, "middle", 16, title, " font-weight=\"bold\"");
    line(svg, margin_left, margin_top, margin_left, margin_top + inner_h,
         "stroke=\"#000000\" stroke-width=\"1\"");
    line(svg, margin_left, margin_top + inner_h, margin_left + inner_w, margin_top + inner_h,
         "stroke=\"#000000\" stroke-width=\"1\"");
    text(svg, margin_left - 6.0, sy(lo + pad) + 4.0, "end", 9, format_scientific3(lo + pad));
    text(svg, margin_left - 6.0, sy(hi - pad) + 4.0, "end", 9, format_scientific3(hi - pad));

    std::string poly = "  <polyline fill=\"none\" stroke=\"#202020\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) poly += ' ';
        poly += num(sx(start_year + static_cast<int>(i))) + "," + num(sy(values[i]));
    }
    poly += "\"/>\n";
    svg += poly;
    for (std::size_t i = 0; i < values.size(); ++i) {
        svg += "  <circle cx=\"" + num(sx(start_year + static_cast<int>(i))) + "\" cy=\"" +
               num(sy(values[i])) + "\" r=\"2.2\" fill=\"#202020\"/>\n";
    }

    for (const ForecastPoint& f : forecasts) {
        const double x = sx(f.year);
        line(svg, x, sy(f.lower), x, sy(f.upper),
             "stroke=\"#b03030\" stroke-width=\"1\" stroke-dasharray=\"3,2\"");
        line(svg, x - 4.0, sy(f.lower), x + 4.0, sy(f.lower), "stroke=\"#b03030\" stroke-width=\"1\"");
        line(svg, x - 4.0, sy(f.upper), x + 4.0, sy(f.upper), "stroke=\"#b03030\" stroke-width=\"1\"");
        svg += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(sy(f.point)) +
               "\" r=\"2.8\" fill=\"#b03030\"/>\n";
    }

    const int tick_step = span_years <= 12 ? 2 : 4;
    for (int year = start_year; year <= last_year; year += tick_step)
        text(svg, sx(year), margin_top + inner_h + 16.0, "middle", 9, std::to_string(year));
    svg += "</svg>\n";
    return svg;
}

}  // namespace excessd

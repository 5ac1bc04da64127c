#include "cookiedim/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "cookiedim/errors.hpp"

namespace cookiedim {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

LinePlot::LinePlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void LinePlot::add_series(const std::vector<double>& x,
                          const std::vector<double>& y,
                          const std::string& color, double stroke_width,
                          const std::string& name) {
  if (x.size() != y.size())
    throw DomainError("plot series x and y sizes differ");
  series_.push_back({x, y, color, stroke_width, name});
}

void LinePlot::add_marker(double x, double y, const std::string& color) {
  markers_.push_back({x, y, color});
}

std::string LinePlot::render() const {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  auto grow = [&](double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  };
  for (const Series& s : series_)
    for (std::size_t i = 0; i < s.x.size(); ++i) grow(s.x[i], s.y[i]);
  for (const Marker& m : markers_) grow(m.x, m.y);
  if (!std::isfinite(x_lo) || !std::isfinite(y_lo)) {
    x_lo = 0.0;
    x_hi = 1.0;
    y_lo = 0.0;
    y_hi = 1.0;
  }
  if (x_hi - x_lo < 1e-12) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  double pad = 0.05 * (y_hi - y_lo);
  if (pad < 1e-12) pad = 0.5;
  y_lo -= pad;
  y_hi += pad;

  auto px = [&](double x) {
    return kLeft + (x - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
  };
  auto py = [&](double y) {
    return kHeight - kBottom -
           (y - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" font-size=\"16\" "
      << "text-anchor=\"middle\" font-family=\"sans-serif\">" << title_
      << "</text>\n";

  // axes
  out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kHeight - kBottom)
      << "\" x2=\"" << fmt(kWidth - kRight) << "\" y2=\""
      << fmt(kHeight - kBottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\""
      << fmt(kLeft) << "\" y2=\"" << fmt(kHeight - kBottom)
      << "\" stroke=\"black\"/>\n";

  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    double fx = x_lo + (x_hi - x_lo) * i / ticks;
    double fy = y_lo + (y_hi - y_lo) * i / ticks;
    out << "<line x1=\"" << fmt(px(fx)) << "\" y1=\""
        << fmt(kHeight - kBottom) << "\" x2=\"" << fmt(px(fx)) << "\" y2=\""
        << fmt(kHeight - kBottom + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(px(fx)) << "\" y=\""
        << fmt(kHeight - kBottom + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">"
        << fmt_tick(fx) << "</text>\n";
    out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(fy))
        << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(py(fy))
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(fy) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">"
        << fmt_tick(fy) << "</text>\n";
  }
  out << "<text x=\"" << fmt((kLeft + kWidth - kRight) / 2) << "\" y=\""
      << fmt(kHeight - 12)
      << "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">"
      << x_label_ << "</text>\n";
  out << "<text x=\"16\" y=\"" << fmt((kTop + kHeight - kBottom) / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 16 "
      << fmt((kTop + kHeight - kBottom) / 2) << ")\">" << y_label_
      << "</text>\n";

  double legend_y = kTop + 8;
  for (const Series& s : series_) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"" << s.width << "\" points=\"";
    bool open = false;
    std::string seg;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        if (open) {
          out << seg << "\"/>\n<polyline fill=\"none\" stroke=\"" << s.color
              << "\" stroke-width=\"" << s.width << "\" points=\"";
          seg.clear();
          open = false;
        }
        continue;
      }
      if (!seg.empty()) seg += " ";
      seg += fmt(px(s.x[i])) + "," + fmt(py(s.y[i]));
      open = true;
    }
    out << seg << "\"/>\n";
    if (!s.name.empty()) {
      out << "<line x1=\"" << fmt(kWidth - kRight - 150) << "\" y1=\""
          << fmt(legend_y) << "\" x2=\"" << fmt(kWidth - kRight - 126)
          << "\" y2=\"" << fmt(legend_y) << "\" stroke=\"" << s.color
          << "\" stroke-width=\"" << s.width << "\"/>\n";
      out << "<text x=\"" << fmt(kWidth - kRight - 120) << "\" y=\""
          << fmt(legend_y + 4)
          << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.name
          << "</text>\n";
      legend_y += 16;
    }
  }
  for (const Marker& m : markers_) {
    if (!std::isfinite(m.x) || !std::isfinite(m.y)) continue;
    out << "<circle cx=\"" << fmt(px(m.x)) << "\" cy=\"" << fmt(py(m.y))
        << "\" r=\"5\" fill=\"none\" stroke=\"" << m.color
        << "\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void LinePlot::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write SVG file: " + path);
  out << render();
}

}  // namespace cookiedim

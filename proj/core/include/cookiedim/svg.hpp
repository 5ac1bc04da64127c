#pragma once

#include <string>
#include <vector>

namespace cookiedim {

// minimal deterministic line plot: axes with ticks, polylines, point markers
class LinePlot {
 public:
  LinePlot(std::string title, std::string x_label, std::string y_label);

  // NaN gaps split the polyline
  void add_series(const std::vector<double>& x, const std::vector<double>& y,
                  const std::string& color, double stroke_width,
                  const std::string& name = "");
  void add_marker(double x, double y, const std::string& color);

  std::string render() const;
  void write(const std::string& path) const;

 private:
  struct Series {
    std::vector<double> x, y;
    std::string color;
    double width;
    std::string name;
  };
  struct Marker {
    double x, y;
    std::string color;
  };

  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  std::vector<Marker> markers_;
};

}  // namespace cookiedim

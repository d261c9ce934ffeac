#pragma once

#include <geocheck/linalg.hpp>

#include <string>
#include <vector>

namespace geocheck::cli {

/// Minimal SVG 1.1 writer for planar figures in model coordinates (y up).
/// The viewBox is fitted to everything drawn, with a 5% margin; stroke
/// widths and text sizes are fractions of the figure diagonal.
class Svg {
 public:
  struct Style {
    std::string stroke = "black";
    std::string fill = "none";
    double width = 1.0;  // in thousandths of the diagonal
    bool dashed = false;
  };

  void polyline(const std::vector<Vec2>& pts, const Style& style, bool closed = false);
  void line(const Vec2& a, const Vec2& b, const Style& style);
  void circle(const Vec2& centre, double radius, const Style& style);
  /// Dot of fixed on-screen size.
  void dot(const Vec2& p, const std::string& colour);
  void label(const Vec2& p, const std::string& text);

  std::string str() const;
  /// Throws Error(kInvalidArgument) when the file cannot be written.
  void write(const std::string& path) const;

 private:
  enum class Kind { kPolyline, kPolygon, kCircle, kDot, kLabel };
  struct Item {
    Kind kind;
    std::vector<Vec2> pts;
    double radius = 0.0;
    Style style;
    std::string text;
  };
  void extend(const Vec2& p);

  std::vector<Item> items_;
  Vec2 lo_{1e300, 1e300};
  Vec2 hi_{-1e300, -1e300};
};

}  // namespace geocheck::cli

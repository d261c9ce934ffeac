#include "svg.hpp"

#include <geocheck/error.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace geocheck::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
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

}  // namespace

void Svg::extend(const Vec2& p) {
  lo_ = lo_.cwiseMin(p);
  hi_ = hi_.cwiseMax(p);
}

void Svg::polyline(const std::vector<Vec2>& pts, const Style& style, bool closed) {
  if (pts.size() < 2) return;
  for (const Vec2& p : pts) extend(p);
  items_.push_back({closed ? Kind::kPolygon : Kind::kPolyline, pts, 0.0, style, {}});
}

void Svg::line(const Vec2& a, const Vec2& b, const Style& style) { polyline({a, b}, style); }

void Svg::circle(const Vec2& centre, double radius, const Style& style) {
  extend(centre - Vec2(radius, radius));
  extend(centre + Vec2(radius, radius));
  items_.push_back({Kind::kCircle, {centre}, radius, style, {}});
}

void Svg::dot(const Vec2& p, const std::string& colour) {
  extend(p);
  Style s;
  s.fill = colour;
  items_.push_back({Kind::kDot, {p}, 0.0, s, {}});
}

void Svg::label(const Vec2& p, const std::string& text) {
  extend(p);
  items_.push_back({Kind::kLabel, {p}, 0.0, {}, text});
}

std::string Svg::str() const {
  Vec2 lo = lo_, hi = hi_;
  if (items_.empty()) {
    lo = Vec2(-1, -1);
    hi = Vec2(1, 1);
  }
  const double diag = std::max((hi - lo).norm(), 1e-12);
  const Vec2 pad = Vec2::Constant(0.05 * diag);
  lo -= pad;
  hi += pad;
  const double w = hi.x() - lo.x(), h = hi.y() - lo.y();
  // Model y points up; SVG y points down, so every y is negated.
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" << num(800.0 * h / w)
    << "\" viewBox=\"" << num(lo.x()) << ' ' << num(-hi.y()) << ' ' << num(w) << ' ' << num(h) << "\">\n";
  auto point = [](const Vec2& p) { return num(p.x()) + "," + num(-p.y()); };
  auto style = [&](const Style& s) {
    std::string out = "stroke=\"" + s.stroke + "\" fill=\"" + s.fill + "\" stroke-width=\"" +
                      num(s.width * 1e-3 * diag) + "\"";
    if (s.dashed) out += " stroke-dasharray=\"" + num(6e-3 * diag) + "," + num(4e-3 * diag) + "\"";
    return out;
  };
  for (const Item& it : items_) {
    switch (it.kind) {
      case Kind::kPolyline:
      case Kind::kPolygon: {
        o << '<' << (it.kind == Kind::kPolygon ? "polygon" : "polyline") << " points=\"";
        for (std::size_t i = 0; i < it.pts.size(); ++i) o << (i ? " " : "") << point(it.pts[i]);
        o << "\" " << style(it.style) << "/>\n";
        break;
      }
      case Kind::kCircle:
        o << "<circle cx=\"" << num(it.pts[0].x()) << "\" cy=\"" << num(-it.pts[0].y()) << "\" r=\""
          << num(it.radius) << "\" " << style(it.style) << "/>\n";
        break;
      case Kind::kDot:
        o << "<circle cx=\"" << num(it.pts[0].x()) << "\" cy=\"" << num(-it.pts[0].y()) << "\" r=\""
          << num(4e-3 * diag) << "\" fill=\"" << it.style.fill << "\" stroke=\"none\"/>\n";
        break;
      case Kind::kLabel:
        o << "<text x=\"" << num(it.pts[0].x()) << "\" y=\"" << num(-it.pts[0].y()) << "\" font-size=\""
          << num(2.5e-2 * diag) << "\" font-family=\"sans-serif\">" << escape(it.text) << "</text>\n";
        break;
    }
  }
  o << "</svg>\n";
  return o.str();
}

void Svg::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write SVG file " + path);
  out << str();
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write SVG file " + path);
}

}  // namespace geocheck::cli

// Static SVG figures: a polygon Y in dark gray over its free disposal hull in
// light gray with the efficient chains drawn on top, and the LASSO front.

#ifndef EFFSET_CLI_SVG_HPP
#define EFFSET_CLI_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "effset/geom2d.hpp"
#include "effset/instances.hpp"
#include "effset/lasso.hpp"

namespace effset::cli::svg {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  double x0, y0, x1, y1, scale;
  double px(double x) const { return (x - x0) * scale; }
  double py(double y) const { return (y1 - y) * scale; }
  double width() const { return (x1 - x0) * scale; }
  double height() const { return (y1 - y0) * scale; }
};

}  // namespace detail

inline std::string polygon_figure(const instances::NamedPolygon& np, const geom2d::PolygonVerdict& v) {
  const auto& verts = np.polygon.vertices();
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& p : verts) {
    lo_x = std::min(lo_x, to_double(p.x));
    lo_y = std::min(lo_y, to_double(p.y));
    hi_x = std::max(hi_x, to_double(p.x));
    hi_y = std::max(hi_y, to_double(p.y));
  }
  const detail::Frame f{lo_x - 0.6, lo_y - 0.6, hi_x + 1.2, hi_y + 1.2, 100.0};
  using detail::num;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width()) << "\" height=\"" << num(f.height())
    << "\" viewBox=\"0 0 " << num(f.width()) << " " << num(f.height()) << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Free disposal hull, clipped to the frame.
  const auto& c = v.envelope.corners;
  o << "<polygon fill=\"#d9d9d9\" stroke=\"none\" points=\"";
  for (const auto& p : c) o << num(f.px(to_double(p.x))) << "," << num(f.py(to_double(p.y))) << " ";
  o << num(f.px(f.x1)) << "," << num(f.py(to_double(c.back().y))) << " " << num(f.px(f.x1)) << ","
    << num(f.py(f.y1)) << " " << num(f.px(to_double(c.front().x))) << "," << num(f.py(f.y1)) << "\"/>\n";

  o << "<polygon fill=\"#7f7f7f\" stroke=\"#404040\" stroke-width=\"1\" points=\"";
  for (const auto& p : verts) o << num(f.px(to_double(p.x))) << "," << num(f.py(to_double(p.y))) << " ";
  o << "\"/>\n";

  const auto draw_chain = [&](const geom2d::SegmentChain& ch, const char* color, const char* dash) {
    for (const auto& p : ch.pieces()) {
      const double ax = f.px(to_double(p.a.x)), ay = f.py(to_double(p.a.y));
      const double bx = f.px(to_double(p.b.x)), by = f.py(to_double(p.b.y));
      if (!p.is_point()) {
        o << "<line x1=\"" << num(ax) << "\" y1=\"" << num(ay) << "\" x2=\"" << num(bx) << "\" y2=\"" << num(by)
          << "\" stroke=\"" << color << "\" stroke-width=\"4\"" << dash << "/>\n";
      }
      const auto dot = [&](double x, double y, bool closed) {
        o << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"6\" stroke=\"" << color
          << "\" stroke-width=\"2\" fill=\"" << (closed ? color : "white") << "\"/>\n";
      };
      dot(ax, ay, p.is_point() || p.a_closed);
      if (!p.is_point()) dot(bx, by, p.b_closed);
    }
  };
  draw_chain(v.m, "black", "");
  draw_chain(v.alpha_witnesses, "#c00000", " stroke-dasharray=\"8,5\"");

  for (const auto& [name, p] : np.labels) {
    o << "<text x=\"" << num(f.px(to_double(p.x)) + 8) << "\" y=\"" << num(f.py(to_double(p.y)) - 8)
      << "\" font-family=\"serif\" font-size=\"20\">" << name << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

/// (f1~, f2~) of the accepted sweep entries, joined in sweep order.
inline std::string lasso_front(const lasso::SweepResult& sr) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& e : sr.entries) {
    if (e.ok) pts.emplace_back(e.objectives.f1_tilde, e.objectives.f2_tilde);
  }
  using detail::num;
  const double W = 640, H = 480, pad = 50;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!pts.empty()) {
    x0 = x1 = pts[0].first;
    y0 = y1 = pts[0].second;
    for (const auto& [x, y] : pts) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
  }
  const auto px = [&](double x) { return pad + (x - x0) / (x1 - x0) * (W - 2 * pad); };
  const auto py = [&](double y) { return H - pad - (y - y0) / (y1 - y0) * (H - 2 * pad); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\"" << H - pad
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << H - pad
    << "\" stroke=\"black\"/>\n";
  o << "<polyline fill=\"none\" stroke=\"#7f7f7f\" points=\"";
  for (const auto& [x, y] : pts) o << num(px(x)) << "," << num(py(y)) << " ";
  o << "\"/>\n";
  for (const auto& [x, y] : pts) o << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"4\"/>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" font-size=\"14\">f1~</text>\n";
  o << "<text x=\"8\" y=\"" << H / 2 << "\" font-size=\"14\">f2~</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace effset::cli::svg

#endif  // EFFSET_CLI_SVG_HPP

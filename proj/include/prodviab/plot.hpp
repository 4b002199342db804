#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "prodviab/polytope.hpp"

namespace prodviab {

/// label,x1,y1,x2,y2 with x = q and y = p, rationals as num/den.
[[nodiscard]] inline auto region_csv(const Region2d& r) -> std::string {
  std::ostringstream out;
  out << "label,x1,y1,x2,y2\n";
  for (const auto& s : r.segments)
    out << '"' << s.label << "\"," << s.x1 << ',' << s.y1 << ',' << s.x2 << ',' << s.y2 << '\n';
  return out.str();
}

[[nodiscard]] inline auto region_svg(const Region2d& r) -> std::string {
  double qmax = 1.0;
  for (const auto& [q, p] : r.vertices) qmax = std::max(qmax, q.to_double());
  const double w = 480, h = 360, pad = 40;
  auto sx = [&](const Rational& q) { return pad + (w - 2 * pad) * q.to_double() / qmax; };
  auto sy = [&](const Rational& p) { return h - pad - (h - 2 * pad) * p.to_double(); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << pad << "\" y2=\"" << pad
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << w - pad + 8 << "\" y=\"" << h - pad + 4 << "\">q</text>\n";
  out << "<text x=\"" << pad - 4 << "\" y=\"" << pad - 8 << "\">p</text>\n";
  if (!r.vertices.empty()) {
    // Vertices sorted by angle around their centroid give the polygon outline.
    double cq = 0, cp = 0;
    for (const auto& [q, p] : r.vertices) {
      cq += q.to_double();
      cp += p.to_double();
    }
    cq /= static_cast<double>(r.vertices.size());
    cp /= static_cast<double>(r.vertices.size());
    auto pts = r.vertices;
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a.second.to_double() - cp, a.first.to_double() - cq) <
             std::atan2(b.second.to_double() - cp, b.first.to_double() - cq);
    });
    out << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.6\" points=\"";
    for (const auto& [q, p] : pts) out << sx(q) << ',' << sy(p) << ' ';
    out << "\"/>\n";
  }
  for (const auto& s : r.segments) {
    out << "<line x1=\"" << sx(s.x1) << "\" y1=\"" << sy(s.y1) << "\" x2=\"" << sx(s.x2) << "\" y2=\"" << sy(s.y2)
        << "\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
    const Rational mq = (s.x1 + s.x2) / Rational(2);
    const Rational mp = (s.y1 + s.y2) / Rational(2);
    out << "<text x=\"" << sx(mq) + 6 << "\" y=\"" << sy(mp) - 6 << "\" font-size=\"12\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace prodviab

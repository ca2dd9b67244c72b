#include <cstdio>
#include <sstream>

#include "tlc/render.hpp"

namespace tlc {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string to_svg(const RealizedCurve& rc, const SvgOptions& opts) {
  const double w = opts.width, h = opts.height;
  auto px = [&](const Point& p) { return fmt(p.x() * w) + "," + fmt((1 - p.y()) * h); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\"" << opts.height
      << "\" viewBox=\"0 0 " << opts.width << " " << opts.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto& s = rc.samples;
  const int n = static_cast<int>(s.size());
  if (!opts.coorientation) {
    out << "<path class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(opts.stroke_width)
        << "\" d=\"M";
    for (int i = 0; i < n; ++i) out << (i ? " L" : "") << px(s[i]);
    out << " Z\"/>\n";
  } else {
    // each side from its first sample to the first sample of the next side
    for (std::size_t r = 0; r < rc.sides.size(); ++r) {
      const auto& range = rc.sides[r];
      const auto& sigma = opts.coorientation->sigma;
      // the simple loop carries no sides; draw it outward
      const int sign = sigma.empty() ? 1 : sigma.at(range.side);
      out << "<path class=\"side\" data-side=\"" << range.side << "\" fill=\"none\" stroke=\""
          << (sign > 0 ? "#1a9641" : "#d7191c") << "\" stroke-width=\"" << fmt(opts.stroke_width) << "\" d=\"M";
      for (int i = range.begin; i <= range.end; ++i) out << (i > range.begin ? " L" : "") << px(s[i % n]);
      out << "\"/>\n";
    }
  }

  if (opts.crossing_markers)
    for (const auto& c : rc.crossings)
      out << "<circle class=\"crossing\" cx=\"" << fmt(c.point.x() * w) << "\" cy=\"" << fmt((1 - c.point.y()) * h)
          << "\" r=\"3\" fill=\"none\" stroke=\"#2b83ba\"/>\n";

  // passage i sits between side i and side i + 1
  for (int p : opts.inflection_passages) {
    for (const auto& range : rc.sides) {
      if (range.side != p) continue;
      const Point at = (s[(range.end - 1 + n) % n] + s[range.end % n]) / 2;
      out << "<rect class=\"inflection\" x=\"" << fmt(at.x() * w - 3) << "\" y=\"" << fmt((1 - at.y()) * h - 3)
          << "\" width=\"6\" height=\"6\" fill=\"#fdae61\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tlc

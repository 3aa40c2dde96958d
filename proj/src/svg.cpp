#include "postulatum/svg.hpp"

#include <set>
#include <sstream>

namespace postulatum::svg {

namespace {

class Viewport {
 public:
  explicit Viewport(const SvgOptions& o) : size_(o.size), margin_(o.margin) {}
  double x(const Rational& v) const { return margin_ + v.get_d() * size_; }
  double y(const Rational& v) const { return margin_ + (1.0 - v.get_d()) * size_; }

 private:
  double size_;
  double margin_;
};

}  // namespace

std::string kind_color(ParallelKind::Tag tag) {
  switch (tag) {
    case ParallelKind::Tag::Elliptic: return "#d95f02";
    case ParallelKind::Tag::Euclidean: return "#1b9e77";
    case ParallelKind::Tag::FiniteMany: return "#7570b3";
    case ParallelKind::Tag::CountablyInfinite: return "#e7298a";
    case ParallelKind::Tag::Hyperbolic: return "#67a9cf";
  }
  return "#000000";
}

std::string render_zone_map(const square::ZoneMap& zones, const SvgOptions& options) {
  const Viewport vp(options);
  const int legend_height = 24;
  const int width = options.size + 2 * options.margin;
  const int height = width + legend_height * 6;
  std::set<ParallelKind::Tag> present;

  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  for (const auto& cell : zones.cells) {
    present.insert(cell.kind.tag());
    os << "  <polygon class=\"cell\" data-kind=\"" << to_string(cell.kind) << "\" fill=\""
       << kind_color(cell.kind.tag()) << "\" stroke=\"#ffffff\" stroke-width=\"0.5\" points=\"";
    for (std::size_t i = 0; i < cell.polygon.size(); ++i) {
      os << (i ? " " : "") << vp.x(cell.polygon[i].x) << "," << vp.y(cell.polygon[i].y);
    }
    os << "\"/>\n";
  }

  for (const auto& side : zones.boundary) {
    for (const auto& piece : side) {
      if (piece.is_point()) continue;
      const std::string color = piece.kind ? kind_color(piece.kind->tag()) : "#000000";
      if (piece.kind) present.insert(piece.kind->tag());
      os << "  <line class=\"boundary\" x1=\"" << vp.x(piece.from.x) << "\" y1=\"" << vp.y(piece.from.y)
         << "\" x2=\"" << vp.x(piece.to.x) << "\" y2=\"" << vp.y(piece.to.y) << "\" stroke=\"" << color
         << "\" stroke-width=\"6\"/>\n";
    }
  }

  for (square::Corner c : square::kCorners) {
    const auto& kind = zones.corner_kinds[static_cast<std::size_t>(c)];
    const Point2 p = square::corner_point(c);
    if (kind) present.insert(kind->tag());
    os << "  <circle class=\"corner\" cx=\"" << vp.x(p.x) << "\" cy=\"" << vp.y(p.y) << "\" r=\"6\" fill=\""
       << (kind ? kind_color(kind->tag()) : "#000000") << "\" stroke=\"#000000\"/>\n";
    os << "  <text x=\"" << vp.x(p.x) + (p.x == 0 ? -16 : 8) << "\" y=\"" << vp.y(p.y) + (p.y == 0 ? 16 : -8)
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << square::corner_name(c) << "</text>\n";
  }

  for (const auto& chord : options.witness_chords) {
    os << "  <line class=\"witness\" x1=\"" << vp.x(chord.q1().x) << "\" y1=\"" << vp.y(chord.q1().y)
       << "\" x2=\"" << vp.x(chord.q2().x) << "\" y2=\"" << vp.y(chord.q2().y)
       << "\" stroke=\"#444444\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
  }

  const auto& l = zones.line;
  os << "  <line class=\"line\" x1=\"" << vp.x(l.q1().x) << "\" y1=\"" << vp.y(l.q1().y) << "\" x2=\""
     << vp.x(l.q2().x) << "\" y2=\"" << vp.y(l.q2().y) << "\" stroke=\"#000000\" stroke-width=\"2.5\"/>\n";

  int row = 0;
  for (ParallelKind::Tag tag : present) {
    const double y = width + row * legend_height;
    os << "  <rect class=\"legend\" x=\"" << options.margin << "\" y=\"" << y << "\" width=\"16\" height=\"16\" fill=\""
       << kind_color(tag) << "\"/>\n";
    os << "  <text x=\"" << options.margin + 24 << "\" y=\"" << y + 13
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << tag_name(tag) << "</text>\n";
    ++row;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace postulatum::svg

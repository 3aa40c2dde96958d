#pragma once

#include <string>
#include <vector>

#include "postulatum/zone_map.hpp"

namespace postulatum::svg {

/// Fixed legend colours, one per ParallelKind tag.
std::string kind_color(ParallelKind::Tag tag);

struct SvgOptions {
  int size = 480;    // pixel width and height of the square
  int margin = 24;
  std::vector<square::Chord> witness_chords;
};

/// Renders a zone map: one <polygon> per cell, boundary pieces as thick
/// strokes, corners as dots, the line in black and a legend of the kinds
/// actually present.
std::string render_zone_map(const square::ZoneMap& zones, const SvgOptions& options = {});

}  // namespace postulatum::svg

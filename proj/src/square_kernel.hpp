#pragma once

#include <optional>

#include "postulatum/square_model.hpp"

namespace postulatum::square::detail {

/// Largest scale (in bits) for which the __int128 kernel cannot overflow.
inline constexpr std::size_t kKernelBits = 56;

/// Chord endpoints multiplied by the common scale.
struct ScaledChord {
  __int128 q1x, q1y, q2x, q2y;
};

/// Scales l onto [0, side]^2 with side = lcm(point_denominator, l's
/// denominators). Empty when side exceeds kKernelBits.
std::optional<ScaledChord> scale_chord(const Chord& l, const Integer& point_denominator, __int128& side);

/// (px, py) already scaled; must be in the square and off the line.
ParallelKind kernel_kind(__int128 side, __int128 px, __int128 py, const ScaledChord& l);

bool kernel_on_line(__int128 px, __int128 py, const ScaledChord& l);

}  // namespace postulatum::square::detail

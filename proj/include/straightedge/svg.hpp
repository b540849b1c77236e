#pragma once

// SVG 1.1 diagrams of a construction trace. Floating point is used for drawing only.

#include <filesystem>
#include <string>

#include "straightedge/constructions.hpp"

namespace straightedge {

struct SvgOptions {
  int width = 800;
  int height = 800;
  /// Samples per conic over a half-turn of the pencil through a defining point.
  int conic_samples = 720;
};

/// The diagram as a document: inputs K1..K10, the conics C1, C2, D1, D2, the lines L_P, L_Q,
/// L_R, and labels for P1, P2, P, Q, R, W, X, Y, Z, U, V. Points at infinity become labelled
/// arrows at the frame edge. Throws PreconditionError if the trace's incidences fail.
std::string render_svg(const ConstructionTrace& trace, const SvgOptions& options = {});

/// Writes render_svg to `path`; throws std::runtime_error if the file cannot be written.
void emit_svg(const ConstructionTrace& trace, const std::filesystem::path& path, const SvgOptions& options = {});

}  // namespace straightedge

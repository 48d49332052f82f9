#pragma once

#include <string>
#include <vector>

#include "ninepalace/trace.hpp"

namespace ninepalace {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
    RenderFormat format = RenderFormat::Ascii;
    int refinement = 1; // n >= 1; n > 1 draws the n-refined subgrid
    bool show_families = true;
};

// Splits a trace into display panels: a panel ends when the next step
// changes kind or would land on a position the panel already uses.
std::vector<std::vector<const TraceStep*>> split_panels(const StepTrace& trace);

/// Deterministic text rendering of a trace; ASCII layout or SVG document.
std::string render(const StepTrace& trace, const RenderSpec& spec);

// Compass glyph for an arrow (8 directions, '.' for stay), with a trailing
// '~' on wrap moves.
std::string arrow_glyph(const Arrow& a);

} // namespace ninepalace

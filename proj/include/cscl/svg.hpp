#pragma once

#include <span>
#include <string>

#include "cscl/chord.hpp"
#include "cscl/lavaurs.hpp"
#include "cscl/pullback.hpp"

namespace cscl {

enum class GeodesicStyle { Straight, HyperbolicArc };
enum class ColorBy { Type, Block };

struct RenderConfig {
    unsigned size_px = 800;
    GeodesicStyle style = GeodesicStyle::HyperbolicArc;
    ColorBy color_by = ColorBy::Type;
    std::string background = "#ffffff";
    double stroke_width = 0.8;
    double circle_stroke_width = 1.5;
};

struct StyledChord {
    Chord chord;
    std::string css_class;
};

/// One <path> per chord in the given order, plus the unit circle. Coordinates use 12 decimals.
std::string render_svg(std::span<const StyledChord> chords, const RenderConfig& cfg);

/// Classes "type-B"/"type-D" or "block-N" depending on cfg.color_by; canonical record order.
std::string render_comajors(std::span<const ComajorRecord> records, const RenderConfig& cfg);

/// Classes "level-K" by pullback depth.
std::string render_prelamination(const Prelamination& p, const RenderConfig& cfg);

} // namespace cscl

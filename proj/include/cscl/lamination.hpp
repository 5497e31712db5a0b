#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cscl/chord.hpp"

namespace cscl {

/// First crossing pair found by an interval sweep, O(n log n). Degenerate chords are ignored.
std::optional<std::pair<Chord, Chord>> find_crossing(std::span<const Chord> chords);

/// Sorted, deduplicated copy.
std::vector<Chord> canonical_set(std::span<const Chord> chords);

/// First chord whose antipode is missing from the set.
std::optional<Chord> find_antipode_gap(std::span<const Chord> sorted_chords);

} // namespace cscl

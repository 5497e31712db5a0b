#pragma once

#include <span>
#include <vector>

#include "cscl/angle.hpp"
#include "cscl/chord.hpp"

namespace cscl {

/// B: period 2n with sigma_3^n(x) = -x. D: every other periodic point.
enum class PointType { B, D };

const char* to_string(PointType t);
PointType parse_point_type(std::string_view s);

struct PeriodicClass {
    PointType ptype = PointType::D;
    unsigned block_period = 1;
    unsigned point_period = 1;
    friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
};

/// Rejects angles with non-zero preperiod.
PeriodicClass classify_periodic(const Angle& x);

/// Every angle of exact period k, sorted.
std::vector<Angle> periodic_points(unsigned k);

/// Periodic points of the given type and block period, sorted. Enumerates only the
/// candidate denominators of that type, so it scales to larger blocks than periodic_points.
std::vector<Angle> periodic_points_of_type(unsigned block, PointType t);

/// Preperiod-1 preimages of the type-t, block-`block` periodic points, sorted.
std::vector<Angle> preperiod1_points(unsigned block, PointType t);

struct ChordOrbit {
    unsigned preperiod = 0;
    unsigned pointwise_period = 1;
    unsigned setwise_period = 1;
    /// chords[0] is the starting chord; chords[preperiod..] is the cycle.
    std::vector<Chord> chords;

    std::span<const Chord> cycle() const { return std::span<const Chord>(chords).subspan(preperiod); }
};

/// Iterates sigma_3 on a chord until it repeats. Throws std::runtime_error past max_steps.
ChordOrbit chord_orbit(const Chord& ch, unsigned max_steps = 1u << 20);

} // namespace cscl

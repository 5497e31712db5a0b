#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cscl/chord.hpp"

namespace cscl {

/// One circle arc, positively oriented from `from` to `to`.
struct Arc {
    Angle from;
    Angle to;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// The short strips of a comajor c: the region between M_c and M'_c together with its antipodal copy.
struct StripSystem {
    Chord M;
    Chord Mp;
    Rational width;
    /// The bounding chords M, M', -M, -M'.
    std::vector<Chord> bounds;
    /// Short edges of Q_c and -Q_c; each spans one boundary arc.
    std::vector<Chord> short_edges;
    /// The open boundary arcs of both strips (two per strip; empty when c is degenerate).
    std::vector<Arc> arcs;
};

/// Accepts degenerate chords and chords of length at most 1/6.
StripSystem strips_of(const Chord& c);

/// Why a chord meets the open strips.
enum class StripContact { None, CrossesBound, EndpointInArc, Diagonal };

struct StripHit {
    StripContact contact = StripContact::None;
    /// The bounding chord crossed, the short edge whose arc holds an endpoint, or the diagonal itself.
    std::optional<Chord> boundary;
};

StripHit strip_contact(const Chord& d, const StripSystem& strips);

/// True iff d meets the open region SH(c) u -SH(c). Touching a vertex or lying on a bound is not a hit.
bool hits_strip_interior(const Chord& d, const Chord& c);

enum class Legality { Legal, Illegal };

/// A reference into the orbit of c (sign +1) or -c (sign -1).
struct OrbitRef {
    int sign = 1;
    unsigned index = 0;
    Chord chord;
};

struct LegalityWitness {
    enum class Kind { Crossing, Strip };
    Kind kind = Kind::Crossing;
    // Crossing: two orbit members that cross.
    OrbitRef first;
    OrbitRef second;
    // Strip: the forward image sigma_3^image_index(c) meeting the strips.
    unsigned image_index = 0;
    Chord image;
    Chord boundary;
    StripContact contact = StripContact::None;
};

struct LegalityVerdict {
    Legality status = Legality::Legal;
    std::optional<LegalityWitness> witness;

    bool legal() const { return status == Legality::Legal; }
};

/// Decides legality of the symmetric pair {c, -c}: no two chords of the forward orbits of c and -c
/// cross, and no forward image sigma_3^i(c), i >= 1, meets the open strips of c.
/// Accepts degenerate chords and chords of length at most 1/6; throws std::invalid_argument otherwise.
LegalityVerdict is_legal_pair(const Chord& c);

bool is_comajor(const Chord& c);

std::string describe(const LegalityVerdict& v);
const char* to_string(StripContact contact);

} // namespace cscl

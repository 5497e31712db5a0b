#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cscl/angle.hpp"

namespace cscl {

/// Unordered pair of circle points, kept as (min, max). Equal endpoints make a degenerate chord.
class Chord {
public:
    Chord() = default;
    Chord(Angle x, Angle y);
    explicit Chord(Angle point) : a_(point), b_(std::move(point)) {}

    const Angle& a() const { return a_; }
    const Angle& b() const { return b_; }
    bool degenerate() const { return a_ == b_; }
    bool has_endpoint(const Angle& x) const { return a_ == x || b_ == x; }

    std::string to_string() const;

    friend bool operator==(const Chord&, const Chord&) = default;
    friend std::strong_ordering operator<=>(const Chord& l, const Chord& r)
    {
        if (auto c = l.a_ <=> r.a_; c != 0)
            return c;
        return l.b_ <=> r.b_;
    }

private:
    Angle a_;
    Angle b_;
};

Chord make_chord(long p1, long q1, long p2, long q2);

enum class LengthClass { Degenerate, Short, Medium, Long, Critical, Diameter };

const char* to_string(LengthClass cls);

/// Length of the shorter arc cut off by the chord, in [0, 1/2].
Rational length(const Chord& ch);
LengthClass classify(const Chord& ch);

/// Interleaved endpoints. Shared endpoints and degenerate chords never cross.
bool crosses(const Chord& c1, const Chord& c2);

/// Same chord or disjoint closed segments (no shared endpoint, no crossing).
bool disjoint(const Chord& c1, const Chord& c2);

Chord image(const Chord& ch);
Chord antipode(const Chord& ch);
Chord rotate(const Chord& ch, const Rational& r);

/// ch + 1/3 and ch + 2/3.
std::pair<Chord, Chord> translate_siblings(const Chord& ch);

/// With (a,b) the shorter arc: (a+1/3, b-1/3) and (a+2/3, b-2/3).
std::pair<Chord, Chord> sml_siblings(const Chord& ch);

/// Endpoints ordered so that the positive arc first -> second is the shorter one
/// (ties for diameters resolve to canonical order).
std::pair<Angle, Angle> short_arc_endpoints(const Chord& ch);

/// The pair M_c, M'_c with the same image as c, longest first. For a degenerate c this is the
/// critical chord (c+1/3, c+2/3) twice. Accepts chords of length at most 1/6.
std::pair<Chord, Chord> majors_of(const Chord& c);

/// Vertices of the convex hull of M_c and M'_c in circular order starting from the smallest angle.
std::vector<Angle> quad(const Chord& c);

/// Edges of Q_c: the two majors, then the short edges (empty for degenerate c, where Q_c is a chord).
struct QuadEdges {
    Chord major;
    Chord minor_major;
    std::vector<Chord> short_edges;
};
QuadEdges quad_edges(const Chord& c);

/// m lies in the closed region cut off by n and its shorter arc. Rejects diameter n.
bool under(const Chord& m, const Chord& n);

/// Exactly one of x, y lies in the open arc (a, b) of ch. Rejects endpoint coincidence.
bool separates(const Chord& ch, const Angle& x, const Angle& y);

struct ChordHash {
    std::size_t operator()(const Chord& ch) const;
};

} // namespace cscl

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cscl/chord.hpp"
#include "cscl/legality.hpp"

namespace cscl {

/// Finite-depth symmetric pullback prelamination of a legal pair {c, -c}.
struct Prelamination {
    Chord seed;
    unsigned depth = 0;
    /// The critical leaves +-M_c for degenerate c, otherwise the edges of +-Q_c.
    std::vector<Chord> barriers;
    /// Sorted; levels[i] is the pullback depth at which chords[i] first appeared.
    std::vector<Chord> chords;
    std::vector<unsigned> levels;

    bool contains(const Chord& ch) const;
};

class IllegalSeedError : public std::runtime_error {
public:
    IllegalSeedError(Chord seed, LegalityVerdict verdict);
    const Chord& seed() const { return seed_; }
    const LegalityVerdict& verdict() const { return verdict_; }

private:
    Chord seed_;
    LegalityVerdict verdict_;
};

/// Preimage chords of ch that cross no barrier. When these contain pairwise disjoint sibling
/// collections, one collection is selected: antipode-closed if ch is, then the shortest total
/// length (short pullbacks), then the canonically smallest. Otherwise every candidate is returned.
/// Rejects degenerate ch.
std::vector<Chord> pullbacks_of_chord(const Chord& ch, std::span<const Chord> barriers);

/// Level 0 holds the critical leaves +-M_c (degenerate c) or the edges of +-Q_c and the forward
/// orbits of +-c; each further level holds the pullbacks of the previous level's new chords.
/// Throws IllegalSeedError if {c, -c} is not legal.
Prelamination build_prelamination(const Chord& c, unsigned depth);

/// build_prelamination minus the short edges of +-Q_c and every chord whose forward orbit reaches
/// one of them. Requires a non-degenerate c whose image has periodic endpoints.
Prelamination hyperbolic_prune(const Chord& c, unsigned depth);

/// Short edges of Q_c and -Q_c, sorted.
std::vector<Chord> short_quad_edges(const Chord& c);

} // namespace cscl

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cscl/chord.hpp"
#include "cscl/legality.hpp"
#include "cscl/orbit.hpp"

namespace cscl {

/// A co-periodic comajor produced by the builder.
struct ComajorRecord {
    Chord chord;
    PointType ptype = PointType::D;
    unsigned block_period = 1;
    unsigned step = 1;
    Chord minor;

    friend bool operator==(const ComajorRecord&, const ComajorRecord&) = default;
};

ComajorRecord make_record(Chord chord, PointType t, unsigned block);

/// Canonical output order: block, then type (B before D), then chord key.
bool canonical_less(const ComajorRecord& l, const ComajorRecord& r);

struct BuildState {
    std::vector<ComajorRecord> leaves; // in commit order
    unsigned completed_block = 0;

    std::vector<Chord> chords() const;
    /// Leaves sorted by canonical_less.
    std::vector<ComajorRecord> sorted() const;
};

/// The builder hit a contract violation (odd group, overlong pair, crossing, failed verification).
class BuildError : public std::runtime_error {
public:
    explicit BuildError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by build(..., verify = true) with the failing leaf and its verdict.
class VerificationError : public BuildError {
public:
    VerificationError(ComajorRecord leaf, LegalityVerdict verdict);
    const ComajorRecord& leaf() const { return leaf_; }
    const LegalityVerdict& verdict() const { return verdict_; }

private:
    ComajorRecord leaf_;
    LegalityVerdict verdict_;
};

/// Block period 1: (1/6,1/3), (2/3,5/6) of type D and (5/12,7/12), (11/12,1/12) of type B.
std::vector<ComajorRecord> seed_leaves();

/// Partitions points by the components of the disk cut along the existing leaves. Points in the central
/// component are further split by the four sectors between the block-1 leaves. Each group is ordered
/// along its stretch of the circle. Throws BuildError if a point is an existing leaf endpoint.
std::vector<std::vector<Angle>> group_by_component(std::span<const Angle> points, const BuildState& state);

/// Joins (1st,2nd), (3rd,4th), ... Throws BuildError on odd size or a chord longer than 1/6.
std::vector<Chord> pair_consecutively(std::span<const Angle> group);

/// Adds all block-`block` comajors: type B first, then type D against the enlarged leaf set.
BuildState run_step(BuildState state, unsigned block);

struct BuildOptions {
    bool verify = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

BuildState build(unsigned max_block, BuildOptions options = {});
inline BuildState build(unsigned max_block, bool verify) { return build(max_block, BuildOptions{verify, 0}); }

struct SeparatedNesting {
    ComajorRecord inner;
    ComajorRecord outer;
    /// A leaf of lower block period strictly between them.
    ComajorRecord separator;
};

struct NestingReport {
    /// (inner, outer) pairs of equal block period and different type.
    std::vector<std::pair<ComajorRecord, ComajorRecord>> cross_type;
    /// Nested pairs of equal type and block period, each with a witness of lower block period.
    std::vector<SeparatedNesting> same_type;
};

/// Throws BuildError if two leaves of equal type and block period are nested with no leaf of
/// lower block period between them.
NestingReport nesting_audit(const BuildState& state);

} // namespace cscl

#include "cscl/lavaurs.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "cscl/lamination.hpp"

namespace cscl {

namespace {

const Rational kSixth(1, 6);

struct ShortArc {
    Angle lo;
    Rational len;
};

ShortArc short_arc(const Chord& ch)
{
    auto [lo, hi] = short_arc_endpoints(ch);
    return {lo, arc_length(lo, hi)};
}

// The four arcs between the block-1 leaves, each bounding a piece of the central component.
const std::vector<ShortArc>& central_sectors()
{
    static const std::vector<ShortArc> sectors{
        {make_angle(1, 12), Rational(1, 12)},
        {make_angle(1, 3), Rational(1, 12)},
        {make_angle(7, 12), Rational(1, 12)},
        {make_angle(5, 6), Rational(1, 12)},
    };
    return sectors;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                fn(i);
        });
}

} // namespace

ComajorRecord make_record(Chord chord, PointType t, unsigned block)
{
    Chord minor = image(chord);
    return ComajorRecord{std::move(chord), t, block, block, std::move(minor)};
}

bool canonical_less(const ComajorRecord& l, const ComajorRecord& r)
{
    if (l.block_period != r.block_period)
        return l.block_period < r.block_period;
    if (l.ptype != r.ptype)
        return l.ptype == PointType::B;
    return l.chord < r.chord;
}

std::vector<Chord> BuildState::chords() const
{
    std::vector<Chord> out;
    out.reserve(leaves.size());
    for (const auto& r : leaves)
        out.push_back(r.chord);
    return out;
}

std::vector<ComajorRecord> BuildState::sorted() const
{
    std::vector<ComajorRecord> out = leaves;
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

VerificationError::VerificationError(ComajorRecord leaf, LegalityVerdict verdict)
    : BuildError("verification failed for " + leaf.chord.to_string() + ": " + describe(verdict)),
      leaf_(std::move(leaf)), verdict_(std::move(verdict))
{
}

std::vector<ComajorRecord> seed_leaves()
{
    return {
        make_record(make_chord(1, 6, 1, 3), PointType::D, 1),
        make_record(make_chord(2, 3, 5, 6), PointType::D, 1),
        make_record(make_chord(5, 12, 7, 12), PointType::B, 1),
        make_record(make_chord(11, 12, 1, 12), PointType::B, 1),
    };
}

std::vector<std::vector<Angle>> group_by_component(std::span<const Angle> points, const BuildState& state)
{
    std::set<Angle> endpoints;
    std::vector<ShortArc> arcs;
    arcs.reserve(state.leaves.size());
    for (const auto& r : state.leaves) {
        endpoints.insert(r.chord.a());
        endpoints.insert(r.chord.b());
        arcs.push_back(short_arc(r.chord));
    }

    // Key: index of the innermost enclosing leaf, or -(sector + 1) in the central component.
    // Two points share a component iff the same leaves enclose them.
    std::map<long, std::vector<std::pair<Rational, Angle>>> groups;
    for (const Angle& x : points) {
        if (endpoints.count(x))
            throw BuildError("group_by_component: point " + x.to_string() + " is an existing leaf endpoint");
        std::optional<std::size_t> inner;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            Rational off = arc_length(arcs[i].lo, x);
            if (off < arcs[i].len && (!inner || arcs[i].len < arcs[*inner].len))
                inner = i;
        }
        if (inner) {
            groups[static_cast<long>(*inner)].emplace_back(arc_length(arcs[*inner].lo, x), x);
            continue;
        }
        const auto& sectors = central_sectors();
        bool placed = false;
        for (std::size_t s = 0; s < sectors.size() && !placed; ++s) {
            Rational off = arc_length(sectors[s].lo, x);
            if (sgn(off) > 0 && off < sectors[s].len) {
                groups[-static_cast<long>(s) - 1].emplace_back(off, x);
                placed = true;
            }
        }
        if (!placed)
            throw BuildError("group_by_component: point " + x.to_string() + " lies in no component sector");
    }

    std::vector<std::vector<Angle>> out;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        std::vector<Angle> g;
        for (auto& m : members)
            g.push_back(std::move(m.second));
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.front() < r.front(); });
    return out;
}

std::vector<Chord> pair_consecutively(std::span<const Angle> group)
{
    if (group.size() % 2 != 0) {
        std::string pts;
        for (const Angle& x : group)
            pts += " " + x.to_string();
        throw BuildError("pair_consecutively: odd group size " + std::to_string(group.size()) + ":" + pts);
    }
    std::vector<Chord> out;
    for (std::size_t i = 0; i < group.size(); i += 2) {
        Chord ch(group[i], group[i + 1]);
        if (length(ch) > kSixth)
            throw BuildError("pair_consecutively: produced chord " + ch.to_string() + " is longer than 1/6");
        out.push_back(std::move(ch));
    }
    return out;
}

BuildState run_step(BuildState state, unsigned block)
{
    if (block == 0 || state.completed_block != block - 1)
        throw BuildError("run_step: expected block " + std::to_string(state.completed_block + 1) + ", got "
                         + std::to_string(block));
    if (block == 1) {
        state.leaves = seed_leaves();
        state.completed_block = 1;
        return state;
    }
    for (PointType t : {PointType::B, PointType::D}) {
        std::vector<Angle> points = preperiod1_points(block, t);
        std::vector<ComajorRecord> added;
        for (const auto& group : group_by_component(points, state))
            for (Chord& ch : pair_consecutively(group))
                added.push_back(make_record(std::move(ch), t, block));
        std::sort(added.begin(), added.end(), canonical_less);
        state.leaves.insert(state.leaves.end(), added.begin(), added.end());
        std::vector<Chord> all = state.chords();
        if (auto hit = find_crossing(all))
            throw BuildError("run_step: new leaves cross: " + hit->first.to_string() + " and "
                             + hit->second.to_string());
    }
    state.completed_block = block;
    return state;
}

BuildState build(unsigned max_block, BuildOptions options)
{
    if (max_block == 0)
        throw std::invalid_argument("build: max_block must be at least 1");
    BuildState state;
    for (unsigned b = 1; b <= max_block; ++b)
        state = run_step(std::move(state), b);
    if (!options.verify)
        return state;

    std::vector<std::optional<LegalityVerdict>> failures(state.leaves.size());
    parallel_for(state.leaves.size(), options.threads, [&](std::size_t i) {
        LegalityVerdict v = is_legal_pair(state.leaves[i].chord);
        if (!v.legal())
            failures[i] = std::move(v);
    });
    for (std::size_t i = 0; i < failures.size(); ++i)
        if (failures[i])
            throw VerificationError(state.leaves[i], *failures[i]);

    std::multiset<Angle> used;
    for (const auto& r : state.leaves) {
        used.insert(r.chord.a());
        used.insert(r.chord.b());
    }
    std::multiset<Angle> expected;
    for (unsigned b = 1; b <= max_block; ++b)
        for (PointType t : {PointType::B, PointType::D})
            for (const Angle& x : preperiod1_points(b, t))
                expected.insert(x);
    if (used != expected)
        throw BuildError("build: leaf endpoints do not use every preperiod-1 point exactly once");
    return state;
}

NestingReport nesting_audit(const BuildState& state)
{
    std::map<unsigned, std::vector<const ComajorRecord*>> by_block;
    for (const auto& r : state.leaves)
        by_block[r.block_period].push_back(&r);
    auto strictly_under = [](const ShortArc& inner, const ShortArc& outer) {
        return inner.len < outer.len && arc_length(outer.lo, inner.lo) <= outer.len
               && arc_length(outer.lo, inner.lo) + inner.len <= outer.len;
    };
    NestingReport report;
    std::vector<const ComajorRecord*> lower;
    std::vector<ShortArc> lower_arcs;
    for (auto& [block, leaves] : by_block) {
        std::vector<ShortArc> arcs;
        for (const auto* r : leaves)
            arcs.push_back(short_arc(r->chord));
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = 0; j < leaves.size(); ++j) {
                if (i == j || !strictly_under(arcs[i], arcs[j]))
                    continue;
                if (leaves[i]->ptype != leaves[j]->ptype) {
                    report.cross_type.emplace_back(*leaves[i], *leaves[j]);
                    continue;
                }
                std::size_t k = 0;
                while (k < lower.size()
                       && !(strictly_under(arcs[i], lower_arcs[k]) && strictly_under(lower_arcs[k], arcs[j])))
                    ++k;
                if (k == lower.size())
                    throw BuildError("nesting_audit: " + leaves[i]->chord.to_string() + " is under "
                                     + leaves[j]->chord.to_string()
                                     + " with equal type and block period and no lower-block leaf between them");
                report.same_type.push_back({*leaves[i], *leaves[j], *lower[k]});
            }
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            lower.push_back(leaves[i]);
            lower_arcs.push_back(arcs[i]);
        }
    }
    auto key = [](const ComajorRecord& inner, const ComajorRecord& outer) { return std::pair{inner.chord, outer.chord}; };
    std::sort(report.cross_type.begin(), report.cross_type.end(),
              [&](const auto& l, const auto& r) { return key(l.first, l.second) < key(r.first, r.second); });
    std::sort(report.same_type.begin(), report.same_type.end(),
              [&](const auto& l, const auto& r) { return key(l.inner, l.outer) < key(r.inner, r.outer); });
    return report;
}

} // namespace cscl

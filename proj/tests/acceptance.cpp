// Runs every acceptance criterion and prints one PASS/FAIL line each. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cscl/io.hpp"
#include "cscl/lamination.hpp"
#include "cscl/lavaurs.hpp"
#include "cscl/pullback.hpp"
#include "cscl/svg.hpp"
#include "oracles.hpp"

using namespace cscl;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << "[exception: " << e.what() << "] ";
    }
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && t >= limit_s) {
        o.pass = false;
        o.detail << "[over time limit " << limit_s << " s] ";
    }
    failures += !o.pass;
    std::printf("criterion %2d [PRIMARY] %-34s %s  %s(%.2f s)\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str(), t);
    std::fflush(stdout);
}

Chord ch(long p1, long q1, long p2, long q2) { return make_chord(p1, q1, p2, q2); }
char letter(PointType t) { return t == PointType::B ? 'B' : 'D'; }

std::size_t count_paths(const std::string& svg)
{
    std::size_t n = 0;
    for (auto pos = svg.find("<path "); pos != std::string::npos; pos = svg.find("<path ", pos + 1))
        ++n;
    return n;
}

} // namespace

int main()
{
    // Built once outside the timed sections that only inspect it.
    const BuildState b6 = build(6);

    criterion(1, "seed exactness", 1.0, [](Outcome& o) {
        BuildState s = build(1);
        const std::vector<std::pair<Chord, PointType>> expect{{ch(1, 6, 1, 3), PointType::D},
                                                              {ch(2, 3, 5, 6), PointType::D},
                                                              {ch(5, 12, 7, 12), PointType::B},
                                                              {ch(11, 12, 1, 12), PointType::B}};
        o.require(s.leaves.size() == 4, "four leaves");
        std::string got;
        for (std::size_t i = 0; i < s.leaves.size() && i < 4; ++i) {
            o.require(s.leaves[i].chord == expect[i].first && s.leaves[i].ptype == expect[i].second,
                      "leaf " + std::to_string(i));
            got += s.leaves[i].chord.to_string() + letter(s.leaves[i].ptype) + " ";
        }
        o.detail << got;
    });

    criterion(2, "oracle soundness on build(6)", 60.0, [&](Outcome& o) {
        std::size_t legal = 0;
        for (const auto& r : b6.leaves)
            legal += is_legal_pair(r.chord).legal();
        o.require(legal == b6.leaves.size(), "every leaf legal");
        o.detail << legal << "/" << b6.leaves.size() << " legal ";
    });

    criterion(3, "completeness census, blocks <= 4", 300.0, [&](Outcome& o) {
        auto legal = [](const Chord& c) { return is_legal_pair(c).legal(); };
        std::size_t total = 0;
        for (unsigned n = 1; n <= 4; ++n)
            for (PointType t : {PointType::B, PointType::D}) {
                std::set<Chord> built;
                for (const auto& r : b6.leaves)
                    if (r.block_period == n && r.ptype == t)
                        built.insert(r.chord);
                auto ref = oracle::census(n, letter(t), legal);
                o.require(ref == built, "block " + std::to_string(n) + " " + letter(t));
                total += ref.size();
            }
        o.detail << total << " legal chords, all built ";
    });

    criterion(4, "structural invariants of build(6)", 0, [&](Outcome& o) {
        auto chords = b6.chords();
        auto sorted = canonical_set(chords);
        o.require(sorted.size() == chords.size(), "distinct leaves");
        o.require(!find_antipode_gap(sorted), "antipode closure");
        o.require(!find_crossing(chords), "no crossings (sweep)");
        o.require(!oracle::brute_any_crossing(chords), "no crossings (pairwise)");
        std::map<Angle, int> uses;
        for (const auto& r : b6.leaves) {
            ++uses[r.chord.a()];
            ++uses[r.chord.b()];
            o.require(orbit_info(r.chord.a()) == orbit_info(r.chord.b()), "equal periods " + r.chord.to_string());
            PeriodicClass ca = classify_periodic(tripling(r.chord.a()));
            PeriodicClass cb = classify_periodic(tripling(r.chord.b()));
            o.require(ca == cb && ca.ptype == r.ptype && ca.block_period == r.block_period,
                      "equal types " + r.chord.to_string());
        }
        bool shared = false;
        for (const auto& [x, k] : uses)
            shared = shared || k > 1;
        o.require(!shared, "no shared endpoints");
        std::size_t points = 0;
        for (unsigned n = 1; n <= 6; ++n)
            for (char t : {'B', 'D'})
                for (const Angle& x : oracle::preperiod1_points(n, t)) {
                    ++points;
                    o.require(uses.count(x) && uses[x] == 1, "point " + x.to_string() + " used once");
                }
        o.require(points == uses.size(), "no endpoint outside the preperiod-1 sets");
        o.detail << chords.size() << " leaves, " << points << " preperiod-1 points each used once ";
    });

    criterion(5, "nesting audit on build(6)", 0, [&](Outcome& o) {
        NestingReport rep = nesting_audit(b6); // throws on an unseparated same-type nesting
        bool pin = false;
        for (const auto& [inner, outer] : rep.cross_type)
            pin = pin
                  || (inner.chord == ch(47, 48, 1, 48) && inner.ptype == PointType::B
                      && outer.chord == ch(23, 24, 1, 24) && outer.ptype == PointType::D);
        o.require(pin, "pin B (47/48,1/48) < D (23/24,1/24)");
        for (const auto& n : rep.same_type)
            o.require(n.separator.block_period < n.inner.block_period && under(n.inner.chord, n.separator.chord)
                          && under(n.separator.chord, n.outer.chord),
                      "separator for " + n.inner.chord.to_string());
        o.detail << "0 unseparated same-type nestings; " << rep.same_type.size()
                 << " same-type nested pairs, each with a lower-block leaf between; " << rep.cross_type.size()
                 << " cross-type; pin present ";
    });

    criterion(6, "count law", 0, [&](Outcome& o) {
        std::map<std::pair<unsigned, PointType>, std::size_t> per;
        for (const auto& r : b6.leaves)
            ++per[{r.block_period, r.ptype}];
        for (unsigned n = 1; n <= 6; ++n)
            for (PointType t : {PointType::B, PointType::D})
                o.require(2 * per[{n, t}] == oracle::preperiod1_points(n, letter(t)).size(),
                          "block " + std::to_string(n) + letter(t));
        o.require(per[{2, PointType::B}] == 8 && per[{2, PointType::D}] == 4, "block 2 = 8B + 4D");
        o.require(per[{3, PointType::B}] == 24 && per[{3, PointType::D}] == 24, "block 3 = 24B + 24D");
        o.detail << "block 2: " << per[{2, PointType::B}] << "B+" << per[{2, PointType::D}] << "D, block 3: "
                 << per[{3, PointType::B}] << "B+" << per[{3, PointType::D}] << "D ";
    });

    criterion(7, "length-1/6 scan, denominators <= 48", 10.0, [](Outcome& o) {
        std::set<Chord> legal;
        std::size_t scanned = 0;
        for (long q = 1; q <= 48; ++q)
            for (long p = 0; p < q; ++p) {
                if (oracle::gcd(p, q) != 1)
                    continue;
                Angle x = make_angle(p, q);
                Angle y = rotate(x, Rational(1, 6));
                if (y.denominator() > 48)
                    continue;
                ++scanned;
                Chord c(x, y);
                if (is_legal_pair(c).legal())
                    legal.insert(c);
            }
        std::set<Chord> seeds{ch(1, 6, 1, 3), ch(2, 3, 5, 6), ch(5, 12, 7, 12), ch(11, 12, 1, 12)};
        o.require(legal == seeds, "legal set equals the seeds");
        o.detail << scanned << " chords scanned, " << legal.size() << " legal ";
    });

    criterion(8, "pullback invariants at depth 8", 0, [](Outcome& o) {
        for (const Chord& c : {Chord(make_angle(1, 2)), Chord(make_angle(1, 6)), ch(1, 6, 1, 3), ch(11, 12, 1, 12)}) {
            Prelamination p = build_prelamination(c, 8);
            Rational im = c.degenerate() ? Rational(0) : length(image(c));
            auto a = oracle::audit_lamination(p.chords, im);
            std::string s = c.degenerate() ? "deg " + c.a().to_string() : c.to_string();
            o.require(!find_crossing(p.chords), s + " crossing-free");
            o.require(a.antipode_gaps == 0, s + " antipode-closed");
            o.require(a.forward_gaps == 0, s + " forward-closed");
            o.require(a.sibling_gaps == 0, s + " sibling-complete");
            o.require(a.min_length_violations == 0, s + " minimal-length law");
            o.detail << s << ":" << p.chords.size() << " ";
        }
    });

    criterion(9, "hyperbolic prune, blocks <= 3, depth 8", 0, [&](Outcome& o) {
        std::size_t n = 0;
        for (const auto& r : b6.leaves) {
            if (r.block_period > 3)
                continue;
            ++n;
            Prelamination p = hyperbolic_prune(r.chord, 8);
            o.require(p.contains(r.chord), r.chord.to_string() + " kept");
            o.require(oracle::count_reaching(p.chords, short_quad_edges(r.chord)) == 0,
                      r.chord.to_string() + " avoids short edges");
        }
        o.detail << n << " comajors ";
    });

    criterion(10, "determinism and round trip", 0, [&](Outcome& o) {
        for (unsigned n = 1; n <= 6; ++n) {
            BuildState x = build(n), y = build(n, BuildOptions{true, 3});
            std::string tx = records_to_json_text(x.leaves), ty = records_to_json_text(y.leaves);
            std::string k = "build(" + std::to_string(n) + ") ";
            o.require(tx == ty, k + "identical bytes");
            o.require(records_to_csv(x.leaves) == records_to_csv(y.leaves), k + "identical CSV");
            o.require(records_from_json_text(tx) == x.sorted(), k + "JSON round trip");
            o.require(records_to_json_text(records_from_json_text(tx)) == tx, k + "JSON re-serialization");
            std::string svg = render_comajors(x.leaves, RenderConfig{});
            o.require(count_paths(svg) == x.leaves.size(), k + "SVG path count");
            o.require(svg == render_comajors(y.leaves, RenderConfig{}), k + "identical SVG");
        }
        o.detail << "build(1..6) ";
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}

#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "cscl/lamination.hpp"
#include "cscl/lavaurs.hpp"
#include "cscl/pullback.hpp"
#include "oracles.hpp"

using namespace cscl;

namespace {
Chord ch(long p1, long q1, long p2, long q2) { return make_chord(p1, q1, p2, q2); }

std::array<Angle, 3> preimages(const Angle& x)
{
    return {Angle::from_rational((x.value() + 0) / 3), Angle::from_rational((x.value() + 1) / 3),
            Angle::from_rational((x.value() + 2) / 3)};
}

// Every perfect matching of the 3+3 preimage endpoints into pairwise disjoint chords mapping onto
// ch and crossing no barrier.
std::vector<std::set<Chord>> admissible_matchings(const Chord& target, const std::vector<Chord>& barriers)
{
    auto pa = preimages(target.a());
    auto pb = preimages(target.b());
    std::array<int, 3> perm{0, 1, 2};
    std::vector<std::set<Chord>> out;
    do {
        std::vector<Chord> m;
        for (int i = 0; i < 3; ++i)
            m.emplace_back(pa[i], pb[perm[i]]);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            ok = image(m[i]) == target;
            for (const Chord& br : barriers)
                ok = ok && !crosses(m[i], br);
            for (int j = i + 1; j < 3 && ok; ++j)
                ok = disjoint(m[i], m[j]);
        }
        if (ok)
            out.emplace_back(m.begin(), m.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Rational total_length(const std::set<Chord>& s)
{
    Rational t = 0;
    for (const Chord& c : s)
        t += length(c);
    return t;
}

void check_invariants(const Prelamination& p)
{
    Rational im = p.seed.degenerate() ? Rational(0) : length(image(p.seed));
    CHECK_FALSE(find_crossing(p.chords));
    for (const Chord& b : p.barriers)
        for (const Chord& x : p.chords)
            CHECK_FALSE(crosses(x, b));
    auto a = oracle::audit_lamination(p.chords, im);
    CHECK(a.antipode_gaps == 0);
    CHECK(a.forward_gaps == 0);
    CHECK(a.sibling_gaps == 0);
    CHECK(a.min_length_violations == 0);
    REQUIRE(p.levels.size() == p.chords.size());
    for (std::size_t i = 0; i < p.chords.size(); ++i)
        if (p.levels[i] > 0) {
            CHECK(p.levels[i] <= p.depth);
            CHECK(p.contains(image(p.chords[i])));
        }
}
} // namespace

TEST_CASE("pullbacks_of_chord examples")
{
    auto bars = build_prelamination(ch(11, 12, 1, 12), 0).barriers;
    auto r = pullbacks_of_chord(ch(1, 4, 3, 4), bars);
    CHECK(std::set<Chord>(r.begin(), r.end()) == std::set<Chord>{ch(11, 12, 1, 12), ch(5, 12, 7, 12), ch(1, 4, 3, 4)});
    // Three disjoint matchings avoid the barriers; the diameter is its own antipode and only one
    // of them is antipode-closed.
    auto ms = admissible_matchings(ch(1, 4, 3, 4), bars);
    CHECK(ms.size() == 3);
    int closed = 0;
    for (const auto& m : ms) {
        bool sym = std::all_of(m.begin(), m.end(), [&](const Chord& x) { return m.count(antipode(x)) > 0; });
        if (sym) {
            ++closed;
            CHECK(std::set<Chord>(r.begin(), r.end()) == m);
        }
    }
    CHECK(closed == 1);

    // Pullbacks of the critical leaves admit a full disjoint sibling triple, including a long chord.
    std::vector<Chord> crit{ch(1, 6, 5, 6), ch(1, 3, 2, 3)};
    auto m1 = admissible_matchings(crit[0], crit);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == std::set<Chord>{ch(17, 18, 1, 18), ch(7, 18, 11, 18), ch(5, 18, 13, 18)});
    auto p1 = pullbacks_of_chord(crit[0], crit);
    CHECK(std::set<Chord>(p1.begin(), p1.end()) == m1[0]);

    auto m2 = admissible_matchings(crit[1], crit);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == std::set<Chord>{ch(4, 9, 5, 9), ch(8, 9, 1, 9), ch(2, 9, 7, 9)});
    auto p2 = pullbacks_of_chord(crit[1], crit);
    CHECK(std::set<Chord>(p2.begin(), p2.end()) == m2[0]);

    CHECK_THROWS_AS(pullbacks_of_chord(Chord(make_angle(1, 2)), crit), std::invalid_argument);
}

TEST_CASE("property: a unique admissible matching is what pullbacks_of_chord returns")
{
    BuildState s = build(2);
    int unique = 0;
    for (const auto& r : s.leaves) {
        Prelamination p = build_prelamination(r.chord, 1);
        for (const Chord& x : p.chords) {
            if (x.degenerate())
                continue;
            auto ms = admissible_matchings(x, p.barriers);
            if (ms.size() != 1)
                continue;
            ++unique;
            auto got = pullbacks_of_chord(x, p.barriers);
            CHECK(std::set<Chord>(got.begin(), got.end()) == ms[0]);
        }
    }
    CHECK(unique > 0);
}

TEST_CASE("build_prelamination examples")
{
    Prelamination half = build_prelamination(Chord(make_angle(1, 2)), 1);
    CHECK(std::set<Chord>(half.chords.begin(), half.chords.end())
          == std::set<Chord>{ch(1, 6, 5, 6), ch(1, 3, 2, 3), ch(17, 18, 1, 18), ch(7, 18, 11, 18), ch(5, 18, 13, 18),
                             ch(4, 9, 5, 9), ch(8, 9, 1, 9), ch(2, 9, 7, 9)});
    CHECK(half.barriers == std::vector<Chord>{ch(1, 6, 5, 6), ch(1, 3, 2, 3)});

    Prelamination p = build_prelamination(ch(1, 6, 1, 3), 0);
    for (const Chord& x : {ch(1, 6, 1, 3), ch(2, 3, 5, 6), ch(0, 1, 1, 2)})
        CHECK(p.contains(x));
    CHECK(p.seed == ch(1, 6, 1, 3));
    CHECK(p.depth == 0);

    LegalityVerdict v = is_legal_pair(ch(1, 12, 1, 6));
    try {
        build_prelamination(ch(1, 12, 1, 6), 1);
        FAIL("illegal seed accepted");
    } catch (const IllegalSeedError& e) {
        CHECK(e.seed() == ch(1, 12, 1, 6));
        CHECK(e.verdict().witness->image == v.witness->image);
    }
}

TEST_CASE("collapsing quadrilateral: degenerate 1/6 keeps the short pullbacks of M")
{
    const Chord M = ch(1, 2, 5, 6);
    Prelamination p = build_prelamination(Chord(make_angle(1, 6)), 2);
    auto ms = admissible_matchings(M, p.barriers);
    REQUIRE(ms.size() >= 2);
    auto best = *std::min_element(ms.begin(), ms.end(),
                                  [](const auto& l, const auto& r) { return total_length(l) < total_length(r); });
    for (const Chord& x : best)
        CHECK(p.contains(x));
    CHECK(p.contains(ch(1, 2, 11, 18)));
    CHECK(p.contains(ch(5, 6, 17, 18)));
    for (const auto& m : ms)
        if (m != best)
            for (const Chord& x : m)
                if (!best.count(x))
                    CHECK_FALSE(p.contains(x));
}

TEST_CASE("prelamination invariants at moderate depth")
{
    for (const Chord& c : {Chord(make_angle(1, 2)), Chord(make_angle(1, 6)), Chord(make_angle(1, 7)), ch(1, 6, 1, 3),
                           ch(11, 12, 1, 12), ch(5, 24, 7, 24), ch(47, 48, 1, 48)}) {
        CAPTURE(c.to_string());
        Prelamination p = build_prelamination(c, 5);
        check_invariants(p);
        CHECK(p.contains(c) == !c.degenerate());
    }
    Prelamination small = build_prelamination(ch(5, 24, 7, 24), 3);
    CHECK_FALSE(oracle::brute_any_crossing(small.chords));
}

TEST_CASE("arbitrary-precision path for huge denominators")
{
    // 3^45 alone exceeds the 61-bit fast path.
    Integer q = 1;
    for (int i = 0; i < 45; ++i)
        q *= 3;
    Angle x(Integer(1), q);
    Prelamination p = build_prelamination(Chord(x), 3);
    check_invariants(p);
    CHECK(p.chords.size() == build_prelamination(Chord(make_angle(1, 7)), 3).chords.size());
}

TEST_CASE("hyperbolic_prune")
{
    for (const Chord& c : {ch(11, 12, 1, 12), ch(1, 6, 1, 3), ch(5, 24, 7, 24)}) {
        CAPTURE(c.to_string());
        Prelamination full = build_prelamination(c, 3);
        Prelamination p = hyperbolic_prune(c, 3);
        auto shorts = short_quad_edges(c);
        CHECK(shorts.size() == 4);
        CHECK(p.contains(c));
        for (const Chord& e : shorts)
            CHECK_FALSE(p.contains(e));
        CHECK(oracle::count_reaching(p.chords, shorts) == 0);
        CHECK_FALSE(find_crossing(p.chords));
        CHECK_FALSE(find_antipode_gap(p.chords));
        // Exactly the chords that avoid the short edges survive.
        std::size_t kept = full.chords.size() - oracle::count_reaching(full.chords, shorts);
        CHECK(p.chords.size() == kept);
        for (const Chord& x : p.chords)
            CHECK(full.contains(x));
    }
    // Q = CH{1/4,5/12,7/12,3/4} has majors (1/4,3/4), (5/12,7/12); Q = CH{0,1/2,2/3,5/6} has (0,1/2), (2/3,5/6).
    CHECK(short_quad_edges(ch(11, 12, 1, 12))
          == std::vector<Chord>{ch(1, 12, 1, 4), ch(1, 4, 5, 12), ch(7, 12, 3, 4), ch(3, 4, 11, 12)});
    CHECK(short_quad_edges(ch(1, 6, 1, 3))
          == std::vector<Chord>{ch(0, 1, 1, 6), ch(0, 1, 5, 6), ch(1, 3, 1, 2), ch(1, 2, 2, 3)});
    CHECK_THROWS_AS(hyperbolic_prune(Chord(make_angle(1, 2)), 2), std::invalid_argument);
    CHECK_THROWS_AS(hyperbolic_prune(ch(1, 36, 5, 36), 2), std::invalid_argument);
}

#include "cscl/pullback.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "cscl/lamination.hpp"
#include "cscl/orbit.hpp"

namespace cscl {

namespace {

// Exact arithmetic on angles u/N for a fixed modulus N, with N even and divisible by 3 often enough
// for every pullback taken. Int is uint64_t when N is small enough and mpz_class otherwise.
template <typename Int>
struct Circle {
    Int N;
    Int half;

    explicit Circle(Int modulus) : N(modulus), half(modulus / 2) {}

    Int triple(const Int& u) const { return (u * 3) % N; }
    Int antipode(const Int& u) const { return u < half ? Int(u + half) : Int(u - half); }
    std::array<Int, 3> preimages(const Int& u) const
    {
        if (u % 3 != 0)
            throw std::logic_error("pullback below the resolution of the fixed modulus");
        Int base = u / 3;
        Int step = N / 3;
        return {base, Int(base + step), Int(base + step + step)};
    }
};

template <typename Int>
struct IChord {
    Int a;
    Int b;

    IChord() = default;
    IChord(Int x, Int y)
    {
        if (y < x)
            std::swap(x, y);
        a = std::move(x);
        b = std::move(y);
    }
    bool degenerate() const { return a == b; }
    bool has_endpoint(const Int& x) const { return a == x || b == x; }
    friend bool operator==(const IChord& l, const IChord& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator<(const IChord& l, const IChord& r) { return l.a < r.a || (l.a == r.a && l.b < r.b); }
};

std::size_t hash_int(std::uint64_t v) { return std::hash<std::uint64_t>{}(v); }
std::size_t hash_int(const mpz_class& v) { return mpz_get_ui(v.get_mpz_t()) ^ (mpz_size(v.get_mpz_t()) << 7); }

template <typename Int>
struct IChordHash {
    std::size_t operator()(const IChord<Int>& c) const { return hash_int(c.a) * 0x9e3779b97f4a7c15ULL ^ hash_int(c.b); }
};

template <typename Int>
bool icrosses(const IChord<Int>& c1, const IChord<Int>& c2)
{
    if (c1.degenerate() || c2.degenerate())
        return false;
    if (c1.has_endpoint(c2.a) || c1.has_endpoint(c2.b))
        return false;
    bool in_a = c1.a < c2.a && c2.a < c1.b;
    bool in_b = c1.a < c2.b && c2.b < c1.b;
    return in_a != in_b;
}

template <typename Int>
Int ilength(const IChord<Int>& c, const Int& N)
{
    Int d = c.b - c.a;
    Int other = N - d;
    return other < d ? other : d;
}

template <typename Int>
Int to_int(const Angle& x, const Integer& N);

template <>
std::uint64_t to_int<std::uint64_t>(const Angle& x, const Integer& N)
{
    Integer u = x.numerator() * (N / x.denominator());
    return u.get_ui();
}

template <>
mpz_class to_int<mpz_class>(const Angle& x, const Integer& N)
{
    return x.numerator() * (N / x.denominator());
}

Integer to_integer(std::uint64_t v)
{
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}
const Integer& to_integer(const mpz_class& v) { return v; }

template <typename Int>
class Engine {
public:
    using C = IChord<Int>;

    Engine(const Integer& modulus, std::span<const Chord> barriers)
        : modulus_(modulus), circle_(from_integer(modulus))
    {
        for (const Chord& b : barriers)
            barriers_.push_back(convert(b));
    }

    C convert(const Chord& ch) const { return C(to_int<Int>(ch.a(), modulus_), to_int<Int>(ch.b(), modulus_)); }
    Chord back(const C& ch) const
    {
        return Chord(Angle(to_integer(ch.a), modulus_), Angle(to_integer(ch.b), modulus_));
    }
    C image(const C& ch) const { return C(circle_.triple(ch.a), circle_.triple(ch.b)); }
    C antipode(const C& ch) const { return C(circle_.antipode(ch.a), circle_.antipode(ch.b)); }

    template <typename Existing>
    std::vector<C> pullbacks(const C& ch, Existing&& existing) const
    {
        auto xs = circle_.preimages(ch.a);
        auto ys = circle_.preimages(ch.b);
        std::array<std::array<std::optional<C>, 3>, 3> cand;
        std::vector<C> all;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                C p(xs[i], ys[j]);
                bool ok = std::none_of(barriers_.begin(), barriers_.end(),
                                       [&](const C& bar) { return icrosses(p, bar); });
                if (ok) {
                    cand[i][j] = p;
                    all.push_back(p);
                }
            }

        bool symmetric = antipode(ch) == ch;
        std::optional<std::vector<C>> best;
        int best_existing = -1;
        Int best_length{};
        std::array<int, 3> perm{0, 1, 2};
        do {
            std::vector<C> m;
            for (int i = 0; i < 3; ++i)
                if (cand[i][perm[i]])
                    m.push_back(*cand[i][perm[i]]);
            if (m.size() != 3)
                continue;
            if (icrosses(m[0], m[1]) || icrosses(m[0], m[2]) || icrosses(m[1], m[2]))
                continue;
            std::sort(m.begin(), m.end());
            if (symmetric && !std::all_of(m.begin(), m.end(), [&](const C& x) {
                    return std::find(m.begin(), m.end(), antipode(x)) != m.end();
                }))
                continue;
            int ex = 0;
            Int len{};
            for (const C& x : m) {
                ex += existing(x) ? 1 : 0;
                len += ilength(x, circle_.N);
            }
            bool better = !best || ex > best_existing || (ex == best_existing && len < best_length)
                          || (ex == best_existing && len == best_length && m < *best);
            if (better) {
                best = m;
                best_existing = ex;
                best_length = len;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (best)
            return *best;
        std::sort(all.begin(), all.end());
        return all;
    }

    struct Result {
        std::vector<C> chords;
        std::vector<unsigned> levels;
    };

    Result grow(const std::vector<C>& level0, unsigned depth) const
    {
        std::unordered_map<C, unsigned, IChordHash<Int>> level;
        std::vector<C> frontier;
        for (const C& c : level0)
            if (level.emplace(c, 0).second)
                frontier.push_back(c);
        for (unsigned k = 1; k <= depth; ++k) {
            std::sort(frontier.begin(), frontier.end());
            std::vector<C> next;
            auto existing = [&](const C& x) {
                auto it = level.find(x);
                return it != level.end() && it->second < k;
            };
            for (const C& l : frontier) {
                if (l.degenerate())
                    continue;
                C anti = antipode(l);
                if (anti < l)
                    continue; // covered by its antipode, the frontier being antipode-closed
                for (const C& p : pullbacks(l, existing))
                    for (const C& q : {p, antipode(p)})
                        if (level.emplace(q, k).second)
                            next.push_back(q);
            }
            frontier = std::move(next);
        }
        Result r;
        std::vector<std::pair<C, unsigned>> items(level.begin(), level.end());
        std::sort(items.begin(), items.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
        for (auto& [c, lv] : items) {
            r.chords.push_back(c);
            r.levels.push_back(lv);
        }
        return r;
    }

private:
    static Int from_integer(const Integer& v);

    Integer modulus_;
    Circle<Int> circle_;
    std::vector<C> barriers_;
};

template <>
std::uint64_t Engine<std::uint64_t>::from_integer(const Integer& v)
{
    return v.get_ui();
}
template <>
mpz_class Engine<mpz_class>::from_integer(const Integer& v)
{
    return v;
}

bool fits_u64(const Integer& modulus)
{
    // u + 2N and 3u must stay below 2^64.
    Integer limit = Integer(1) << 61;
    return modulus < limit && sizeof(unsigned long) >= sizeof(std::uint64_t);
}

Integer modulus_for(std::span<const Chord> chords, unsigned depth)
{
    Integer base = 2;
    for (const Chord& c : chords)
        for (const Angle* x : {&c.a(), &c.b()})
            mpz_lcm(base.get_mpz_t(), base.get_mpz_t(), x->denominator().get_mpz_t());
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 3, depth);
    return base * scale;
}

struct Seeds {
    std::vector<Chord> barriers;
    std::vector<Chord> level0;
};

Seeds seeds_for(const Chord& c)
{
    Seeds s;
    if (c.degenerate()) {
        auto [m, unused] = majors_of(c);
        s.barriers = {m, antipode(m)};
        s.level0 = s.barriers;
        return s;
    }
    QuadEdges q = quad_edges(c);
    std::vector<Chord> edges{q.major, q.minor_major};
    edges.insert(edges.end(), q.short_edges.begin(), q.short_edges.end());
    for (const Chord& e : edges) {
        s.barriers.push_back(e);
        s.barriers.push_back(antipode(e));
    }
    s.barriers = canonical_set(s.barriers);
    s.level0 = s.barriers;
    for (const Chord& ch : chord_orbit(c).chords) {
        s.level0.push_back(ch);
        s.level0.push_back(antipode(ch));
    }
    s.level0 = canonical_set(s.level0);
    return s;
}

template <typename Int>
Prelamination run(const Chord& c, unsigned depth, bool prune)
{
    Seeds s = seeds_for(c);
    Integer modulus = modulus_for(s.level0, depth);
    Engine<Int> engine(modulus, s.barriers);
    std::vector<IChord<Int>> level0;
    for (const Chord& ch : s.level0)
        level0.push_back(engine.convert(ch));
    auto grown = engine.grow(level0, depth);

    std::vector<bool> keep(grown.chords.size(), true);
    if (prune) {
        std::unordered_set<IChord<Int>, IChordHash<Int>> targets;
        for (const Chord& e : short_quad_edges(c))
            targets.insert(engine.convert(e));
        std::unordered_map<IChord<Int>, bool, IChordHash<Int>> reaches;
        auto resolve = [&](const IChord<Int>& start) {
            std::vector<IChord<Int>> path;
            std::unordered_set<IChord<Int>, IChordHash<Int>> on_path;
            IChord<Int> cur = start;
            bool result = false;
            while (true) {
                if (auto it = reaches.find(cur); it != reaches.end()) {
                    result = it->second;
                    break;
                }
                if (targets.count(cur)) {
                    result = true;
                    path.push_back(cur);
                    break;
                }
                if (cur.degenerate() || !on_path.insert(cur).second)
                    break;
                path.push_back(cur);
                cur = engine.image(cur);
            }
            for (const auto& p : path)
                reaches[p] = result;
            return result;
        };
        for (std::size_t i = 0; i < grown.chords.size(); ++i)
            keep[i] = !resolve(grown.chords[i]);
    }

    Prelamination out;
    out.seed = c;
    out.depth = depth;
    out.barriers = s.barriers;
    for (std::size_t i = 0; i < grown.chords.size(); ++i)
        if (keep[i]) {
            out.chords.push_back(engine.back(grown.chords[i]));
            out.levels.push_back(grown.levels[i]);
        }
    return out;
}

Prelamination dispatch(const Chord& c, unsigned depth, bool prune)
{
    LegalityVerdict v = is_legal_pair(c);
    if (!v.legal())
        throw IllegalSeedError(c, v);
    Seeds s = seeds_for(c);
    if (fits_u64(modulus_for(s.level0, depth)))
        return run<std::uint64_t>(c, depth, prune);
    return run<mpz_class>(c, depth, prune);
}

} // namespace

bool Prelamination::contains(const Chord& ch) const { return std::binary_search(chords.begin(), chords.end(), ch); }

IllegalSeedError::IllegalSeedError(Chord seed, LegalityVerdict verdict)
    : std::runtime_error("illegal seed " + seed.to_string() + ": " + describe(verdict)), seed_(std::move(seed)),
      verdict_(std::move(verdict))
{
}

std::vector<Chord> pullbacks_of_chord(const Chord& ch, std::span<const Chord> barriers)
{
    if (ch.degenerate())
        throw std::invalid_argument("pullbacks_of_chord: degenerate chord " + ch.to_string());
    std::vector<Chord> all(barriers.begin(), barriers.end());
    all.push_back(ch);
    Integer modulus = modulus_for(all, 1);
    auto none = [](const auto&) { return false; };
    std::vector<Chord> out;
    if (fits_u64(modulus)) {
        Engine<std::uint64_t> e(modulus, barriers);
        for (const auto& p : e.pullbacks(e.convert(ch), none))
            out.push_back(e.back(p));
    } else {
        Engine<mpz_class> e(modulus, barriers);
        for (const auto& p : e.pullbacks(e.convert(ch), none))
            out.push_back(e.back(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Prelamination build_prelamination(const Chord& c, unsigned depth) { return dispatch(c, depth, false); }

Prelamination hyperbolic_prune(const Chord& c, unsigned depth)
{
    if (c.degenerate())
        throw std::invalid_argument("hyperbolic_prune: needs a non-degenerate comajor");
    Chord m = image(c);
    if (orbit_info(m.a()).preperiod != 0 || orbit_info(m.b()).preperiod != 0)
        throw std::invalid_argument("hyperbolic_prune: " + c.to_string() + " is not co-periodic");
    return dispatch(c, depth, true);
}

std::vector<Chord> short_quad_edges(const Chord& c)
{
    std::vector<Chord> out;
    for (const Chord& e : quad_edges(c).short_edges) {
        out.push_back(e);
        out.push_back(antipode(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cscl

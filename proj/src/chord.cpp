#include "cscl/chord.hpp"

#include <algorithm>
#include <stdexcept>

namespace cscl {

namespace {

const Rational kSixth(1, 6);
const Rational kThird(1, 3);
const Rational kHalf(1, 2);

} // namespace

Chord::Chord(Angle x, Angle y)
{
    if (y < x)
        std::swap(x, y);
    a_ = std::move(x);
    b_ = std::move(y);
}

std::string Chord::to_string() const { return "(" + a_.to_string() + ", " + b_.to_string() + ")"; }

Chord make_chord(long p1, long q1, long p2, long q2) { return Chord(make_angle(p1, q1), make_angle(p2, q2)); }

const char* to_string(LengthClass cls)
{
    switch (cls) {
    case LengthClass::Degenerate: return "degenerate";
    case LengthClass::Short: return "short";
    case LengthClass::Medium: return "medium";
    case LengthClass::Long: return "long";
    case LengthClass::Critical: return "critical";
    case LengthClass::Diameter: return "diameter";
    }
    return "?";
}

Rational length(const Chord& ch)
{
    Rational d = ch.b().value() - ch.a().value();
    if (d > kHalf)
        d = 1 - d;
    return d;
}

LengthClass classify(const Chord& ch)
{
    Rational len = length(ch);
    if (sgn(len) == 0)
        return LengthClass::Degenerate;
    if (len < kSixth)
        return LengthClass::Short;
    if (len < kThird)
        return LengthClass::Medium;
    if (len == kThird)
        return LengthClass::Critical;
    if (len == kHalf)
        return LengthClass::Diameter;
    return LengthClass::Long;
}

bool crosses(const Chord& c1, const Chord& c2)
{
    if (c1.degenerate() || c2.degenerate())
        return false;
    if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b()))
        return false;
    bool in_a = c1.a() < c2.a() && c2.a() < c1.b();
    bool in_b = c1.a() < c2.b() && c2.b() < c1.b();
    return in_a != in_b;
}

bool disjoint(const Chord& c1, const Chord& c2)
{
    if (c1 == c2)
        return true;
    if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b()))
        return false;
    return !crosses(c1, c2);
}

Chord image(const Chord& ch) { return Chord(tripling(ch.a()), tripling(ch.b())); }

Chord antipode(const Chord& ch) { return Chord(antipode(ch.a()), antipode(ch.b())); }

Chord rotate(const Chord& ch, const Rational& r) { return Chord(rotate(ch.a(), r), rotate(ch.b(), r)); }

std::pair<Chord, Chord> translate_siblings(const Chord& ch)
{
    if (ch.degenerate())
        throw std::invalid_argument("translate_siblings: degenerate chord " + ch.to_string());
    return {rotate(ch, kThird), rotate(ch, 2 * kThird)};
}

std::pair<Angle, Angle> short_arc_endpoints(const Chord& ch)
{
    if (ch.b().value() - ch.a().value() <= kHalf)
        return {ch.a(), ch.b()};
    return {ch.b(), ch.a()};
}

std::pair<Chord, Chord> sml_siblings(const Chord& ch)
{
    switch (classify(ch)) {
    case LengthClass::Degenerate:
    case LengthClass::Critical:
    case LengthClass::Diameter:
        throw std::invalid_argument("sml_siblings: needs a non-degenerate, non-critical, non-diameter chord, got "
                                    + ch.to_string());
    default:
        break;
    }
    auto [a, b] = short_arc_endpoints(ch);
    return {Chord(rotate(a, kThird), rotate(b, -kThird)), Chord(rotate(a, 2 * kThird), rotate(b, -2 * kThird))};
}

std::pair<Chord, Chord> majors_of(const Chord& c)
{
    if (c.degenerate()) {
        Chord crit(rotate(c.a(), kThird), rotate(c.a(), 2 * kThird));
        return {crit, crit};
    }
    if (length(c) > kSixth)
        throw std::invalid_argument("majors_of: chord longer than 1/6: " + c.to_string());
    auto [p, q] = sml_siblings(c);
    if (length(p) < length(q))
        std::swap(p, q);
    return {p, q};
}

std::vector<Angle> quad(const Chord& c)
{
    auto [m, mp] = majors_of(c);
    std::vector<Angle> v{m.a(), m.b(), mp.a(), mp.b()};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

QuadEdges quad_edges(const Chord& c)
{
    auto [m, mp] = majors_of(c);
    QuadEdges q{m, mp, {}};
    if (c.degenerate())
        return q;
    // The vertices alternate M, M', M', M around the circle; short edges join adjacent
    // vertices belonging to different majors.
    std::vector<Angle> v = quad(c);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Angle& x = v[i];
        const Angle& y = v[(i + 1) % v.size()];
        Chord e(x, y);
        if (e != m && e != mp)
            q.short_edges.push_back(e);
    }
    std::sort(q.short_edges.begin(), q.short_edges.end());
    return q;
}

bool under(const Chord& m, const Chord& n)
{
    if (classify(n) == LengthClass::Diameter)
        throw std::invalid_argument("under: diameter " + n.to_string() + " has no shorter side");
    if (n.degenerate())
        return m == n;
    auto [lo, hi] = short_arc_endpoints(n);
    auto in_closed = [&](const Angle& x) { return x == lo || x == hi || in_open_arc(x, lo, hi); };
    return in_closed(m.a()) && in_closed(m.b());
}

bool separates(const Chord& ch, const Angle& x, const Angle& y)
{
    if (ch.has_endpoint(x) || ch.has_endpoint(y))
        throw std::invalid_argument("separates: point coincides with an endpoint of " + ch.to_string());
    return in_open_arc(x, ch.a(), ch.b()) != in_open_arc(y, ch.a(), ch.b());
}

std::size_t ChordHash::operator()(const Chord& ch) const
{
    AngleHash h;
    return h(ch.a()) * 31 + h(ch.b());
}

} // namespace cscl

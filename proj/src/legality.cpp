#include "cscl/legality.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cscl/orbit.hpp"

namespace cscl {

namespace {

const Rational kSixth(1, 6);

void require_comajor_candidate(const Chord& c, const char* who)
{
    if (!c.degenerate() && length(c) > kSixth)
        throw std::invalid_argument(std::string(who) + ": chord " + c.to_string() + " is longer than 1/6");
}

bool is_diagonal_of(const Chord& d, const std::vector<Angle>& quad_vertices, const std::vector<Chord>& edges)
{
    if (quad_vertices.size() != 4)
        return false;
    auto vertex = [&](const Angle& x) {
        return std::find(quad_vertices.begin(), quad_vertices.end(), x) != quad_vertices.end();
    };
    if (!vertex(d.a()) || !vertex(d.b()))
        return false;
    return std::find(edges.begin(), edges.end(), d) == edges.end();
}

} // namespace

StripSystem strips_of(const Chord& c)
{
    require_comajor_candidate(c, "strips_of");
    QuadEdges q = quad_edges(c);
    StripSystem s;
    s.M = q.major;
    s.Mp = q.minor_major;
    s.width = length(c);
    s.bounds = {q.major, q.minor_major, antipode(q.major), antipode(q.minor_major)};
    for (const Chord& e : q.short_edges) {
        s.short_edges.push_back(e);
        s.short_edges.push_back(antipode(e));
    }
    for (const Chord& e : s.short_edges) {
        auto [from, to] = short_arc_endpoints(e);
        s.arcs.push_back(Arc{from, to});
    }
    return s;
}

StripHit strip_contact(const Chord& d, const StripSystem& strips)
{
    for (const Chord& bound : strips.bounds)
        if (crosses(d, bound))
            return {StripContact::CrossesBound, bound};
    for (std::size_t i = 0; i < strips.arcs.size(); ++i) {
        const Arc& arc = strips.arcs[i];
        if (in_open_arc(d.a(), arc.from, arc.to) || in_open_arc(d.b(), arc.from, arc.to))
            return {StripContact::EndpointInArc, strips.short_edges[i]};
    }
    if (!strips.short_edges.empty()) {
        for (int sign : {1, -1}) {
            Chord M = sign > 0 ? strips.M : antipode(strips.M);
            Chord Mp = sign > 0 ? strips.Mp : antipode(strips.Mp);
            std::vector<Angle> vertices{M.a(), M.b(), Mp.a(), Mp.b()};
            std::sort(vertices.begin(), vertices.end());
            vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
            std::vector<Chord> edges{M, Mp};
            for (const Chord& e : strips.short_edges)
                edges.push_back(e);
            if (is_diagonal_of(d, vertices, edges))
                return {StripContact::Diagonal, d};
        }
    }
    return {};
}

bool hits_strip_interior(const Chord& d, const Chord& c)
{
    return strip_contact(d, strips_of(c)).contact != StripContact::None;
}

LegalityVerdict is_legal_pair(const Chord& c)
{
    require_comajor_candidate(c, "is_legal_pair");
    if (c.degenerate())
        return {};

    ChordOrbit orbit = chord_orbit(c);
    std::vector<OrbitRef> members;
    for (unsigned i = 0; i < orbit.chords.size(); ++i)
        members.push_back({1, i, orbit.chords[i]});
    for (unsigned i = 0; i < orbit.chords.size(); ++i)
        members.push_back({-1, i, antipode(orbit.chords[i])});

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (crosses(members[i].chord, members[j].chord)) {
                LegalityWitness w;
                w.kind = LegalityWitness::Kind::Crossing;
                w.first = members[i];
                w.second = members[j];
                return {Legality::Illegal, w};
            }

    StripSystem strips = strips_of(c);
    for (unsigned i = 1; i < orbit.chords.size(); ++i) {
        StripHit hit = strip_contact(orbit.chords[i], strips);
        if (hit.contact != StripContact::None) {
            LegalityWitness w;
            w.kind = LegalityWitness::Kind::Strip;
            w.image_index = i;
            w.image = orbit.chords[i];
            w.boundary = *hit.boundary;
            w.contact = hit.contact;
            return {Legality::Illegal, w};
        }
    }
    return {};
}

bool is_comajor(const Chord& c) { return is_legal_pair(c).legal(); }

const char* to_string(StripContact contact)
{
    switch (contact) {
    case StripContact::None: return "none";
    case StripContact::CrossesBound: return "crosses";
    case StripContact::EndpointInArc: return "endpoint_in_arc";
    case StripContact::Diagonal: return "diagonal";
    }
    return "?";
}

std::string describe(const LegalityVerdict& v)
{
    if (v.legal())
        return "Legal";
    std::ostringstream os;
    os << "Illegal: ";
    const LegalityWitness& w = *v.witness;
    auto ref = [](const OrbitRef& r) {
        return std::string(r.sign > 0 ? "sigma^" : "-sigma^") + std::to_string(r.index) + "(c) = "
               + r.chord.to_string();
    };
    if (w.kind == LegalityWitness::Kind::Crossing)
        os << ref(w.first) << " crosses " << ref(w.second);
    else
        os << "sigma^" << w.image_index << "(c) = " << w.image.to_string() << " meets the short strips ("
           << to_string(w.contact) << " " << w.boundary.to_string() << ")";
    return os.str();
}

} // namespace cscl

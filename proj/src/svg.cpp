#include "cscl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace cscl {

namespace {

std::string fixed(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    // Avoid "-0.000000000000".
    if (std::string_view(buf) == "-0.000000000000")
        return "0.000000000000";
    return buf;
}

const char* kBlockPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};

} // namespace

std::string render_svg(std::span<const StyledChord> chords, const RenderConfig& cfg)
{
    const double size = cfg.size_px;
    const double cx = size / 2, cy = size / 2;
    const double r = size / 2 - std::max(4.0, size * 0.02);
    auto point = [&](const Angle& a) {
        double t = 2 * std::numbers::pi * a.value().get_d();
        return std::pair{cx + r * std::cos(t), cy - r * std::sin(t)};
    };

    std::set<std::string> classes;
    for (const auto& c : chords)
        classes.insert(c.css_class);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.size_px << "\" height=\"" << cfg.size_px
       << "\" viewBox=\"0 0 " << cfg.size_px << ' ' << cfg.size_px << "\">\n";
    os << "<style>\n";
    os << "path { fill: none; stroke-width: " << cfg.stroke_width << "; stroke: #000000; }\n";
    os << ".type-B { stroke: #c0392b; }\n.type-D { stroke: #2471a3; }\n";
    for (const auto& cls : classes) {
        unsigned n = 0;
        if (std::sscanf(cls.c_str(), "block-%u", &n) == 1 || std::sscanf(cls.c_str(), "level-%u", &n) == 1)
            os << '.' << cls << " { stroke: " << kBlockPalette[n % std::size(kBlockPalette)] << "; }\n";
    }
    os << "</style>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"" << cfg.background << "\"/>\n";
    os << "<circle cx=\"" << fixed(cx) << "\" cy=\"" << fixed(cy) << "\" r=\"" << fixed(r)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << cfg.circle_stroke_width << "\"/>\n";

    for (const auto& sc : chords) {
        const Chord& ch = sc.chord;
        auto [from, to] = short_arc_endpoints(ch);
        auto [x1, y1] = point(from);
        auto [x2, y2] = point(to);
        os << "<path class=\"" << sc.css_class << "\" d=\"M " << fixed(x1) << ' ' << fixed(y1) << ' ';
        LengthClass cls = classify(ch);
        if (cfg.style == GeodesicStyle::Straight || cls == LengthClass::Diameter || cls == LengthClass::Degenerate) {
            os << "L " << fixed(x2) << ' ' << fixed(y2);
        } else {
            // Circle orthogonal to the boundary through both endpoints; it bows toward the centre.
            double half_angle = std::numbers::pi * length(ch).get_d();
            double radius = r * std::tan(half_angle);
            os << "A " << fixed(radius) << ' ' << fixed(radius) << " 0 0 0 " << fixed(x2) << ' ' << fixed(y2);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_comajors(std::span<const ComajorRecord> records, const RenderConfig& cfg)
{
    std::vector<ComajorRecord> sorted(records.begin(), records.end());
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<StyledChord> styled;
    for (const auto& r : sorted)
        styled.push_back({r.chord, cfg.color_by == ColorBy::Type ? std::string("type-") + to_string(r.ptype)
                                                                 : "block-" + std::to_string(r.block_period)});
    return render_svg(styled, cfg);
}

std::string render_prelamination(const Prelamination& p, const RenderConfig& cfg)
{
    std::vector<StyledChord> styled;
    for (std::size_t i = 0; i < p.chords.size(); ++i)
        styled.push_back({p.chords[i], "level-" + std::to_string(i < p.levels.size() ? p.levels[i] : 0)});
    return render_svg(styled, cfg);
}

} // namespace cscl

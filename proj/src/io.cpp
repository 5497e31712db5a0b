#include "cscl/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cscl {

namespace {

std::vector<ComajorRecord> canonical(std::span<const ComajorRecord> records)
{
    std::vector<ComajorRecord> out(records.begin(), records.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

json orbit_ref(const OrbitRef& r)
{
    return json{{"orbit", r.sign > 0 ? "c" : "-c"}, {"index", r.index}, {"chord", to_json(r.chord)}};
}

} // namespace

json to_json(const Chord& ch) { return json{{"a", ch.a().to_string()}, {"b", ch.b().to_string()}}; }

Chord chord_from_json(const json& j)
{
    return Chord(Angle::parse(j.at("a").get<std::string>()), Angle::parse(j.at("b").get<std::string>()));
}

json records_to_json(std::span<const ComajorRecord> records)
{
    json arr = json::array();
    for (const auto& r : canonical(records))
        arr.push_back(json{{"a", r.chord.a().to_string()},
                           {"b", r.chord.b().to_string()},
                           {"type", to_string(r.ptype)},
                           {"block", r.block_period}});
    return arr;
}

std::string records_to_json_text(std::span<const ComajorRecord> records)
{
    return records_to_json(records).dump(1) + "\n";
}

std::vector<ComajorRecord> records_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("comajor JSON must be an array");
    std::vector<ComajorRecord> out;
    for (const auto& item : j)
        out.push_back(make_record(chord_from_json(item), parse_point_type(item.at("type").get<std::string>()),
                                  item.at("block").get<unsigned>()));
    return out;
}

std::vector<ComajorRecord> records_from_json_text(std::string_view text)
{
    return records_from_json(json::parse(text));
}

std::string records_to_csv(std::span<const ComajorRecord> records)
{
    std::ostringstream os;
    os << "a,b,type,block\n";
    for (const auto& r : canonical(records))
        os << r.chord.a().to_string() << ',' << r.chord.b().to_string() << ',' << to_string(r.ptype) << ','
           << r.block_period << '\n';
    return os.str();
}

std::vector<ComajorRecord> records_from_csv(std::string_view text)
{
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || line != "a,b,type,block")
        throw std::invalid_argument("CSV header must be a,b,type,block");
    std::vector<ComajorRecord> out;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        for (std::string col; std::getline(ls, col, ',');)
            cols.push_back(col);
        if (cols.size() != 4)
            throw std::invalid_argument("CSV row needs 4 columns: " + line);
        out.push_back(make_record(Chord(Angle::parse(cols[0]), Angle::parse(cols[1])), parse_point_type(cols[2]),
                                  static_cast<unsigned>(std::stoul(cols[3]))));
    }
    return out;
}

json to_json(const LegalityVerdict& v)
{
    if (v.legal())
        return json{{"status", "legal"}};
    const LegalityWitness& w = *v.witness;
    json wj;
    if (w.kind == LegalityWitness::Kind::Crossing) {
        wj = json{{"kind", "crossing"}, {"first", orbit_ref(w.first)}, {"second", orbit_ref(w.second)}};
    } else {
        wj = json{{"kind", "strip"},
                  {"image_index", w.image_index},
                  {"image", to_json(w.image)},
                  {"boundary", to_json(w.boundary)},
                  {"contact", to_string(w.contact)}};
    }
    return json{{"status", "illegal"}, {"witness", wj}};
}

json to_json(const Prelamination& p)
{
    json chords = json::array();
    for (const Chord& ch : p.chords)
        chords.push_back(to_json(ch));
    return json{{"seed", to_json(p.seed)}, {"depth", p.depth}, {"chords", chords}};
}

std::string prelamination_to_json_text(const Prelamination& p) { return to_json(p).dump(1) + "\n"; }

Prelamination prelamination_from_json(const json& j)
{
    Prelamination p;
    p.seed = chord_from_json(j.at("seed"));
    p.depth = j.at("depth").get<unsigned>();
    for (const auto& c : j.at("chords"))
        p.chords.push_back(chord_from_json(c));
    std::sort(p.chords.begin(), p.chords.end());
    return p;
}

} // namespace cscl

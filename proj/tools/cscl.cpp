#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cscl/io.hpp"
#include "cscl/lavaurs.hpp"
#include "cscl/orbit.hpp"
#include "cscl/pullback.hpp"
#include "cscl/svg.hpp"

using namespace cscl;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Angle parse_angle(const std::string& s)
{
    try {
        return Angle::parse(s);
    } catch (const std::exception& e) {
        throw UsageError("malformed fraction '" + s + "': " + e.what());
    }
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + out);
    f << text;
}

RenderConfig render_config(unsigned size, const std::string& style, const std::string& color_by)
{
    RenderConfig cfg;
    cfg.size_px = size;
    cfg.style = style == "straight" ? GeodesicStyle::Straight : GeodesicStyle::HyperbolicArc;
    cfg.color_by = color_by == "block" ? ColorBy::Block : ColorBy::Type;
    return cfg;
}

std::string orbit_summary(const Angle& x)
{
    OrbitInfo info = orbit_info(x);
    std::ostringstream os;
    os << "preperiod " << info.preperiod << ", period " << info.period;
    Angle tail = tripling_iterate(x, info.preperiod);
    PeriodicClass pc = classify_periodic(tail);
    os << ", tail type " << to_string(pc.ptype) << " block " << pc.block_period;
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symmetric cubic comajor laminations: exact comajor builder, legality checker and pullbacks"};
    app.require_subcommand(1);

    std::string out;
    unsigned size = 800;
    std::string style = "arc", color_by = "type";
    auto add_render_flags = [&](CLI::App* c) {
        c->add_option("--out", out, "Output file (default: stdout)");
        c->add_option("--size", size, "SVG size in pixels")->check(CLI::PositiveNumber);
        c->add_option("--style", style, "Geodesic style")->check(CLI::IsMember({"straight", "arc"}));
        c->add_option("--color-by", color_by, "SVG coloring")->check(CLI::IsMember({"type", "block"}));
    };

    unsigned max_block = 0;
    std::string type = "both", format = "json";
    bool verify = false;
    auto* comajors = app.add_subcommand("comajors", "Build co-periodic comajors up to a block period");
    comajors->add_option("--max-block", max_block, "Largest block period")->required()->check(CLI::Range(1u, 12u));
    comajors->add_option("--type", type, "Point type filter")->check(CLI::IsMember({"B", "D", "both"}));
    comajors->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    comajors->add_flag("--verify", verify, "Check every leaf with the legality oracle");
    add_render_flags(comajors);

    std::string a, b;
    auto* check = app.add_subcommand("check", "Decide whether {c, -c} is a legal pair");
    check->add_option("a", a, "First endpoint, p/q")->required();
    check->add_option("b", b, "Second endpoint, p/q")->required();

    std::string x;
    unsigned max_steps = 1000;
    auto* orbit = app.add_subcommand("orbit", "Forward orbit of an angle under tripling");
    orbit->add_option("x", x, "Angle, p/q")->required();
    orbit->add_option("--max-steps", max_steps, "Longest orbit to print");

    unsigned depth = 0;
    bool prune = false;
    std::string pformat = "json";
    auto* pullback = app.add_subcommand("pullback", "Finite pullback prelamination of a legal pair");
    pullback->add_option("a", a, "First endpoint, p/q")->required();
    pullback->add_option("b", b, "Second endpoint, p/q")->required();
    pullback->add_option("--depth", depth, "Pullback depth")->check(CLI::Range(0u, 14u));
    pullback->add_flag("--prune", prune, "Remove the backward orbits of the short edges of +-Q");
    pullback->add_option("--format", pformat, "Output format")->check(CLI::IsMember({"json", "svg"}));
    add_render_flags(pullback);

    std::string input;
    auto* render = app.add_subcommand("render", "Render a comajor or prelamination JSON file as SVG");
    render->add_option("input", input, "JSON produced by comajors or pullback")->required()->check(CLI::ExistingFile);
    add_render_flags(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        RenderConfig cfg = render_config(size, style, color_by);

        if (*comajors) {
            BuildState state;
            try {
                state = build(max_block, verify);
            } catch (const VerificationError& e) {
                std::cerr << e.what() << "\n" << to_json(e.verdict()).dump(1) << "\n";
                return kFailure;
            } catch (const BuildError& e) {
                std::cerr << e.what() << "\n";
                return kFailure;
            }
            std::vector<ComajorRecord> records;
            for (const auto& r : state.leaves)
                if (type == "both" || to_string(r.ptype) == type)
                    records.push_back(r);
            if (format == "json")
                emit(records_to_json_text(records), out);
            else if (format == "csv")
                emit(records_to_csv(records), out);
            else
                emit(render_comajors(records, cfg), out);
            return kOk;
        }

        if (*check) {
            Chord c(parse_angle(a), parse_angle(b));
            if (length(c) > Rational(1, 6))
                throw UsageError("chord " + c.to_string() + " is longer than 1/6; comajors are at most 1/6 long");
            LegalityVerdict v = is_legal_pair(c);
            if (!v.legal()) {
                std::cout << describe(v) << "\n" << to_json(v).dump(1) << "\n";
                return kFailure;
            }
            std::cout << "Legal\n";
            std::cout << c.a().to_string() << ": " << orbit_summary(c.a()) << "\n";
            if (!c.degenerate())
                std::cout << c.b().to_string() << ": " << orbit_summary(c.b()) << "\n";
            if (!c.degenerate() && orbit_info(c.a()).preperiod == 1) {
                PeriodicClass pc = classify_periodic(tripling(c.a()));
                std::cout << "co-periodic comajor: type " << to_string(pc.ptype) << ", block " << pc.block_period
                          << "\n";
            }
            return kOk;
        }

        if (*orbit) {
            Angle v = parse_angle(x);
            OrbitInfo info = orbit_info(v);
            Angle tail = tripling_iterate(v, info.preperiod);
            PeriodicClass pc = classify_periodic(tail);
            std::cout << "preperiod " << info.preperiod << "\nperiod " << info.period << "\n";
            std::cout << "tail type " << to_string(pc.ptype) << " block " << pc.block_period << "\n";
            if (info.preperiod + info.period > max_steps) {
                std::cout << "orbit longer than --max-steps " << max_steps << "\n";
                return kOk;
            }
            std::cout << "orbit";
            Angle cur = v;
            for (unsigned i = 0; i < info.preperiod + info.period; ++i) {
                std::cout << (i == info.preperiod ? " | " : " ") << cur.to_string();
                cur = tripling(cur);
            }
            std::cout << " | " << cur.to_string() << "\n";
            return kOk;
        }

        if (*pullback) {
            Chord c(parse_angle(a), parse_angle(b));
            if (length(c) > Rational(1, 6))
                throw UsageError("chord " + c.to_string() + " is longer than 1/6");
            Prelamination p;
            try {
                p = prune ? hyperbolic_prune(c, depth) : build_prelamination(c, depth);
            } catch (const IllegalSeedError& e) {
                std::cerr << describe(e.verdict()) << "\n" << to_json(e.verdict()).dump(1) << "\n";
                return kFailure;
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            emit(pformat == "json" ? prelamination_to_json_text(p) : render_prelamination(p, cfg), out);
            return kOk;
        }

        if (*render) {
            std::ifstream f(input, std::ios::binary);
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception& e) {
                throw UsageError(std::string("cannot parse ") + input + ": " + e.what());
            }
            if (j.is_array())
                emit(render_comajors(records_from_json(j), cfg), out);
            else
                emit(render_prelamination(prelamination_from_json(j), cfg), out);
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

#include "cscl/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cscl {

namespace {

Integer pow3(unsigned n)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, n);
    return r;
}

bool has_exact_period(const Angle& x, unsigned k)
{
    if (tripling_iterate(x, k) != x)
        return false;
    for (unsigned d = 1; d < k; ++d)
        if (k % d == 0 && tripling_iterate(x, d) == x)
            return false;
    return true;
}

} // namespace

const char* to_string(PointType t) { return t == PointType::B ? "B" : "D"; }

PointType parse_point_type(std::string_view s)
{
    if (s == "B")
        return PointType::B;
    if (s == "D")
        return PointType::D;
    throw std::invalid_argument("point type must be B or D, got '" + std::string(s) + "'");
}

PeriodicClass classify_periodic(const Angle& x)
{
    OrbitInfo info = orbit_info(x);
    if (info.preperiod != 0)
        throw std::invalid_argument("classify_periodic: " + x.to_string() + " is not periodic");
    unsigned p = info.period;
    if (p % 2 == 0 && tripling_iterate(x, p / 2) == antipode(x))
        return {PointType::B, p / 2, p};
    return {PointType::D, p, p};
}

std::vector<Angle> periodic_points(unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("periodic_points: period must be positive");
    Integer den = pow3(k) - 1;
    std::vector<Angle> out;
    for (Integer j = 0; j < den; ++j) {
        Angle x(j, den);
        if (has_exact_period(x, k))
            out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Angle> periodic_points_of_type(unsigned block, PointType t)
{
    if (block == 0)
        throw std::invalid_argument("block period must be positive");
    Integer den = pow3(block) - 1;
    std::vector<Angle> out;
    if (t == PointType::B) {
        // sigma_3^n(x) = x + 1/2  <=>  (3^n - 1) x = 1/2 mod 1.
        Integer twice = 2 * den;
        for (Integer j = 0; j < den; ++j) {
            Angle x(2 * j + 1, twice);
            if (classify_periodic(x) == PeriodicClass{PointType::B, block, 2 * block})
                out.push_back(std::move(x));
        }
    } else {
        for (Integer j = 0; j < den; ++j) {
            Angle x(j, den);
            if (has_exact_period(x, block) && classify_periodic(x).ptype == PointType::D)
                out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Angle> preperiod1_points(unsigned block, PointType t)
{
    std::vector<Angle> out;
    for (const Angle& y : periodic_points_of_type(block, t)) {
        unsigned period = t == PointType::B ? 2 * block : block;
        Angle in_cycle = tripling_iterate(y, period - 1);
        for (int k = 0; k < 3; ++k) {
            Angle x = Angle::from_rational((y.value() + k) / 3);
            if (x != in_cycle)
                out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ChordOrbit chord_orbit(const Chord& ch, unsigned max_steps)
{
    std::map<Chord, unsigned> seen;
    ChordOrbit orbit;
    Chord cur = ch;
    for (unsigned i = 0; i <= max_steps; ++i) {
        auto [it, inserted] = seen.emplace(cur, i);
        if (!inserted) {
            orbit.preperiod = it->second;
            orbit.setwise_period = i - it->second;
            const Chord& p = orbit.chords[orbit.preperiod];
            unsigned pa = orbit_info(p.a()).period;
            unsigned pb = orbit_info(p.b()).period;
            orbit.pointwise_period = std::lcm(pa, pb);
            return orbit;
        }
        orbit.chords.push_back(cur);
        cur = image(cur);
    }
    throw std::runtime_error("chord_orbit: no closure within " + std::to_string(max_steps) + " steps for "
                             + ch.to_string());
}

} // namespace cscl

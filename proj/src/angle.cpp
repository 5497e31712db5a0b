#include "cscl/angle.hpp"

#include <map>
#include <stdexcept>

namespace cscl {

namespace {

Rational frac(Rational r)
{
    r.canonicalize();
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    r -= fl;
    return r;
}

} // namespace

Angle::Angle(const Integer& p, const Integer& q)
{
    if (sgn(q) == 0)
        throw std::domain_error("angle denominator must be non-zero");
    if (sgn(q) < 0)
        throw std::domain_error("angle denominator must be positive");
    value_ = frac(Rational(p, q));
}

Angle Angle::from_rational(Rational r) { return Angle(frac(std::move(r))); }

std::string Angle::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Angle Angle::parse(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("malformed fraction: '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char ch : s)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw bad();
    std::string ns(num);
    if (ns[0] == '+')
        ns.erase(0, 1);
    Integer p(ns, 10), q(std::string(den), 10);
    if (sgn(q) == 0)
        throw std::domain_error("angle denominator must be non-zero");
    return Angle(p, q);
}

Angle make_angle(long p, long q)
{
    if (q <= 0)
        throw std::domain_error("angle denominator must be positive");
    return Angle(Integer(p), Integer(q));
}

Angle make_angle(const Integer& p, const Integer& q) { return Angle(p, q); }

Angle tripling(const Angle& a) { return Angle::from_rational(a.value() * 3); }

Angle tripling_iterate(const Angle& a, unsigned n)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 3, n);
    return Angle::from_rational(a.value() * Rational(scale));
}

Angle antipode(const Angle& a) { return Angle::from_rational(a.value() + Rational(1, 2)); }

Angle rotate(const Angle& a, const Rational& r) { return Angle::from_rational(a.value() + r); }

Rational arc_length(const Angle& from, const Angle& to)
{
    Rational d = to.value() - from.value();
    if (sgn(d) < 0)
        d += 1;
    return d;
}

bool in_open_arc(const Angle& x, const Angle& a, const Angle& b)
{
    if (a < b)
        return a < x && x < b;
    if (b < a)
        return x > a || x < b;
    // a == b: the open arc is the circle minus one point.
    return x != a;
}

OrbitInfo orbit_info(const Angle& a)
{
    std::map<Angle, unsigned> seen;
    Angle x = a;
    for (unsigned i = 0;; ++i) {
        auto [it, inserted] = seen.emplace(x, i);
        if (!inserted)
            return OrbitInfo{it->second, i - it->second};
        x = tripling(x);
    }
}

std::size_t AngleHash::operator()(const Angle& a) const
{
    std::size_t h = mpz_get_ui(a.value().get_num_mpz_t());
    h ^= mpz_get_ui(a.value().get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL;
    return h;
}

} // namespace cscl

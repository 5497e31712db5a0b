#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cscl {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of the circle R/Z, stored exactly as a reduced fraction in [0,1).
class Angle {
public:
    Angle() = default;

    /// Builds the reduced representative of p/q mod 1. Throws std::domain_error for q == 0.
    Angle(const Integer& p, const Integer& q);

    /// Takes any rational and reduces it mod 1.
    static Angle from_rational(Rational r);

    const Rational& value() const { return value_; }
    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }

    /// "p/q" in lowest terms, "0/1" for zero.
    std::string to_string() const;

    /// Accepts "p/q", "p" or a leading '-' sign.
    static Angle parse(std::string_view text);

    friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Angle(Rational canonical) : value_(std::move(canonical)) {}
    Rational value_{0};
};

Angle make_angle(long p, long q);
Angle make_angle(const Integer& p, const Integer& q);

/// sigma_3: x -> 3x mod 1.
Angle tripling(const Angle& a);

/// sigma_3 applied n times.
Angle tripling_iterate(const Angle& a, unsigned n);

/// x -> x + 1/2 mod 1.
Angle antipode(const Angle& a);

/// x -> x + r mod 1.
Angle rotate(const Angle& a, const Rational& r);

/// Positive-direction distance from a to b, in [0,1).
Rational arc_length(const Angle& from, const Angle& to);

/// True iff x lies strictly inside the positively oriented arc from a to b.
bool in_open_arc(const Angle& x, const Angle& a, const Angle& b);

struct OrbitInfo {
    unsigned preperiod = 0;
    unsigned period = 1;
    friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

/// Preperiod and period under sigma_3, found by iterating and recording.
OrbitInfo orbit_info(const Angle& a);

struct AngleHash {
    std::size_t operator()(const Angle& a) const;
};

} // namespace cscl

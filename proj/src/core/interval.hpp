#pragma once

#include <string>

#include "core/rational.hpp"

namespace gdc {

// Closed rational interval [lo, hi].  Every operation is outward sound: the
// result encloses the exact real value for any members of the inputs.
// Rational field operations are exact; rounding enters only through
// round_out() and the elementary functions in precision.hpp.
class Interval {
  public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(const Rat& v) : lo_(v), hi_(v) {}
    Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw DomainError("interval endpoints out of order");
    }
    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    bool certainly_positive() const { return sgn(lo_) > 0; }
    bool certainly_negative() const { return sgn(hi_) < 0; }
    bool exactly(const Rat& v) const { return lo_ == v && hi_ == v; }

    Interval operator-() const { return Interval(-hi_, -lo_); }
    Interval operator+(const Interval& o) const { return Interval(lo_ + o.lo_, hi_ + o.hi_); }
    Interval operator-(const Interval& o) const { return Interval(lo_ - o.hi_, hi_ - o.lo_); }
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    Interval sq() const;
    Interval abs() const;
    Interval recip() const;

    // Widen endpoints outward onto the 2^-bits dyadic grid (keeps bit sizes
    // of long pipelines bounded; never shrinks the enclosure).
    Interval round_out(long bits) const {
        return Interval(dyadic_floor(lo_, bits), dyadic_ceil(hi_, bits));
    }

    std::string str() const { return "[" + rat_to_string(lo_) + ", " + rat_to_string(hi_) + "]"; }

  private:
    Rat lo_, hi_;
};

inline Interval operator+(const Rat& a, const Interval& b) { return Interval(a) + b; }
inline Interval operator*(const Rat& a, const Interval& b) { return Interval(a) * b; }
inline Interval operator-(const Rat& a, const Interval& b) { return Interval(a) - b; }

enum class Cmp { Less, Greater, Indeterminate };

// Less iff a.hi < b.lo; Greater iff a.lo > b.hi; overlap is Indeterminate.
inline Cmp compare(const Interval& a, const Interval& b) {
    if (a.hi() < b.lo()) return Cmp::Less;
    if (a.lo() > b.hi()) return Cmp::Greater;
    return Cmp::Indeterminate;
}

// Sign of the exact value, when the enclosure decides it.
inline Trit certainly_less(const Interval& a, const Interval& b) {
    Cmp c = compare(a, b);
    if (c == Cmp::Less) return Trit::True;
    if (c == Cmp::Greater) return Trit::False;
    return Trit::Indeterminate;
}

inline Interval iv_min(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval iv_max(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

}  // namespace gdc

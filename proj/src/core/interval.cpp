#include "core/interval.hpp"

#include <algorithm>

namespace gdc {

Interval Interval::operator*(const Interval& o) const {
    Rat p1 = lo_ * o.lo_;
    Rat p2 = lo_ * o.hi_;
    Rat p3 = hi_ * o.lo_;
    Rat p4 = hi_ * o.hi_;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(lo, hi);
}

Interval Interval::recip() const {
    if (contains_zero()) throw DomainError("division by interval containing zero");
    Rat a = 1 / hi_;
    Rat b = 1 / lo_;
    Rat lo = std::min(a, b);
    Rat hi = std::max(a, b);
    return Interval(lo, hi);
}

Interval Interval::operator/(const Interval& o) const { return *this * o.recip(); }

Interval Interval::sq() const {
    if (sgn(lo_) >= 0) return Interval(Rat(lo_ * lo_), Rat(hi_ * hi_));
    if (sgn(hi_) <= 0) return Interval(Rat(hi_ * hi_), Rat(lo_ * lo_));
    Rat hi = std::max(Rat(lo_ * lo_), Rat(hi_ * hi_));
    return Interval(Rat(0), hi);
}

Interval Interval::abs() const {
    if (sgn(lo_) >= 0) return *this;
    if (sgn(hi_) <= 0) return -*this;
    Rat hi = std::max(Rat(-lo_), hi_);
    return Interval(Rat(0), hi);
}

}  // namespace gdc

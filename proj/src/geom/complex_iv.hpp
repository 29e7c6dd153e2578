#pragma once

#include "core/interval.hpp"
#include "core/precision.hpp"

namespace gdc {

// Rectangular complex enclosure.
struct CIv {
    Interval re, im;

    CIv() = default;
    CIv(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    static CIv of(const Rat& r, const Rat& i) { return CIv(Interval(r), Interval(i)); }

    CIv operator+(const CIv& o) const { return {re + o.re, im + o.im}; }
    CIv operator-(const CIv& o) const { return {re - o.re, im - o.im}; }
    CIv operator-() const { return {-re, -im}; }
    CIv operator*(const CIv& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CIv conj() const { return {re, -im}; }
    Interval norm2() const { return re.sq() + im.sq(); }
    CIv recip() const {
        Interval n = norm2();
        return {re / n, -(im / n)};
    }
    CIv operator/(const CIv& o) const { return *this * o.recip(); }
    CIv round_out(long bits) const { return {re.round_out(bits), im.round_out(bits)}; }

    bool contains(const Rat& r, const Rat& i) const { return re.contains(r) && im.contains(i); }
    bool is_point() const { return re.is_point() && im.is_point(); }
    bool exactly(const Rat& r, const Rat& i) const { return re.exactly(r) && im.exactly(i); }
};

inline CIv operator*(const Interval& s, const CIv& z) { return {s * z.re, s * z.im}; }

// dot and cross of R^2 vectors stored as complex enclosures.
inline Interval dot2(const CIv& a, const CIv& b) { return a.re * b.re + a.im * b.im; }
inline Interval cross2(const CIv& a, const CIv& b) { return a.re * b.im - a.im * b.re; }

}  // namespace gdc

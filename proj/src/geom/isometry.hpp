#pragma once

#include <optional>
#include <vector>

#include "geom/complex_iv.hpp"

namespace gdc {

// 2x2 complex interval matrix acting on upper half space.  The action
// formulas are scale invariant, so the same type serves both for the
// det-normalized face-pairing isometries and for helper GL(2,C) maps (Moebius
// normalizations) whose determinant is merely nonzero.
struct Mat2c {
    CIv a, b, c, d;  // [[a, b], [c, d]]

    static Mat2c identity() {
        return {CIv::of(1, 0), CIv::of(0, 0), CIv::of(0, 0), CIv::of(1, 0)};
    }

    Mat2c operator*(const Mat2c& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2c operator-() const { return {-a, -b, -c, -d}; }

    // Adjugate: the inverse up to the (nonzero) determinant factor, hence the
    // inverse as a projective map.  No division required.
    Mat2c adjugate() const { return {d, -b, -c, a}; }

    CIv det() const { return a * d - b * c; }
    CIv trace() const { return a + d; }

    Mat2c round_out(long bits) const {
        return {a.round_out(bits), b.round_out(bits), c.round_out(bits), d.round_out(bits)};
    }

    bool contains_plus_identity() const {
        return a.contains(1, 0) && d.contains(1, 0) && b.contains(0, 0) && c.contains(0, 0);
    }
    bool contains_minus_identity() const {
        return a.contains(-1, 0) && d.contains(-1, 0) && b.contains(0, 0) && c.contains(0, 0);
    }
    bool contains_projective_identity() const {
        return contains_plus_identity() || contains_minus_identity();
    }
    bool is_exact() const {
        return a.is_point() && b.is_point() && c.is_point() && d.is_point();
    }
    bool exactly_projective_identity() const {
        return (a.exactly(1, 0) && d.exactly(1, 0) && b.exactly(0, 0) && c.exactly(0, 0)) ||
               (a.exactly(-1, 0) && d.exactly(-1, 0) && b.exactly(0, 0) && c.exactly(0, 0));
    }

    // Upper bound for the sup-norm distance of any member matrix to +I / -I.
    Rat sup_dist_to_identity(int sign) const;
};

// Face-pairing isometry: a Mat2c whose determinant must enclose 1.
using Isometry = Mat2c;

struct UhsPoint {
    Interval x, y, z;
    UhsPoint() = default;
    UhsPoint(Interval x_, Interval y_, Interval z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
        if (!z.certainly_positive())
            throw IndeterminateError("upper half space point needs z certainly positive");
    }
    CIv horizontal() const { return {x, y}; }
    UhsPoint round_out(long bits) const {
        return UhsPoint(x.round_out(bits), y.round_out(bits), z.round_out(bits));
    }
};

// Point of the sphere at infinity: a finite complex coordinate or Infinity.
struct BoundaryPoint {
    bool infinite = false;
    CIv zeta;

    static BoundaryPoint inf() {
        BoundaryPoint p;
        p.infinite = true;
        return p;
    }
    static BoundaryPoint finite(CIv z) {
        BoundaryPoint p;
        p.zeta = std::move(z);
        return p;
    }
};

// Tri-state distinctness of boundary points at the current width.
Trit boundary_points_distinct(const BoundaryPoint& p, const BoundaryPoint& q);

// Moebius action on H^3.  With w = z + t j the image is
//   z' = ((a z + b) conj(c z + d) + a conj(c) t^2) / D,
//   t' = |det| t / D,      D = |c z + d|^2 + |c|^2 t^2,
// which is invariant under complex rescaling of the matrix, so any invertible
// matrix acts.  Throws IndeterminateError when D cannot be certified nonzero.
UhsPoint apply_uhs(const Mat2c& m, const UhsPoint& p, const Precision& prec);

// Boundary action (a z + b) / (c z + d) with infinity handling.
BoundaryPoint apply_boundary(const Mat2c& m, const BoundaryPoint& p);

// Generalized circle in the base plane: boundary of a hyperbolic plane.
struct CircLine {
    bool is_line = false;
    // circle
    CIv center;
    Interval radius;  // enclosure of the radius, certainly positive
    // line: point + direction (direction certainly nonzero)
    CIv point, dir;

    static CircLine circle(CIv c, Interval r) {
        CircLine g;
        g.center = std::move(c);
        g.radius = std::move(r);
        return g;
    }
    static CircLine line(CIv p, CIv d) {
        CircLine g;
        g.is_line = true;
        g.point = std::move(p);
        g.dir = std::move(d);
        return g;
    }
};

// Image of a generalized circle under a Moebius map, enclosed at the given
// precision (the radius of an image circle involves a square root).
CircLine apply_circline(const Mat2c& m, const CircLine& g, const Precision& prec);

// Side of the base-plane point w relative to the circline: the sign of
// |w-c|^2 - r^2 for circles, of cross(dir, w - point) for lines.
Interval circline_side_value(const CircLine& g, const CIv& w);

// Squared euclidean distance data used by plane-plane reductions.
Interval dist2_point_line(const CIv& w, const CIv& point, const CIv& dir);

}  // namespace gdc

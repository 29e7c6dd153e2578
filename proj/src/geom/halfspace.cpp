#include "geom/halfspace.hpp"

namespace gdc {
namespace {

// Matrix taking the geodesic to the vertical axis over the origin (finite
// foot to 0, the other endpoint to infinity).
Mat2c axis_normalizer(const Geodesic& g) {
    if (g.is_vertical()) {
        // translation z - w
        return {CIv::of(1, 0), -g.foot(), CIv::of(0, 0), CIv::of(1, 0)};
    }
    return MobiusMap{g.e0.zeta, g.e1.zeta}.matrix();
}

// Distance from a point to the vertical axis over the origin:
// sinh d = |horizontal| / height.
Interval dist_point_axis(const UhsPoint& p, const Precision& prec) {
    Interval s2 = p.horizontal().norm2() / p.z.sq();
    return iv_asinh(iv_sqrt(s2, prec), prec);
}

// Distance from the vertical axis over the origin to the hemisphere (c, r),
// assuming the axis misses it: cosh d = |c| / r (the common perpendicular lies
// in the vertical plane through 0 and c).
Interval dist_axis_hemisphere(const CIv& c, const Interval& r, const Precision& prec) {
    Interval q = c.norm2() / r.sq();
    return iv_acosh(iv_sqrt(q, prec), prec);
}

}  // namespace

MobiusMap mobius_normalize(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.infinite || b.infinite)
        throw PreconditionError("mobius_normalize requires finite boundary points");
    Trit distinct = boundary_points_distinct(a, b);
    if (distinct == Trit::False) throw PreconditionError("mobius_normalize requires distinct points");
    if (distinct == Trit::Indeterminate)
        throw IndeterminateError("mobius_normalize endpoints not certified distinct");
    return MobiusMap{a.zeta, b.zeta};
}

Interval dist_points(const UhsPoint& p, const UhsPoint& q, const Precision& prec) {
    Interval gap2 = (p.x - q.x).sq() + (p.y - q.y).sq() + (p.z - q.z).sq();
    Interval coshd = Interval(Rat(1)) + gap2 / (Interval(Rat(2)) * p.z * q.z);
    return iv_acosh(coshd, prec);
}

Interval dist_point_geodesic(const UhsPoint& p, const Geodesic& g, const Precision& prec) {
    Mat2c m = axis_normalizer(g);
    UhsPoint q = apply_uhs(m, p, prec);
    return dist_point_axis(q, prec);
}

Interval dist_point_plane(const UhsPoint& p, const HPlane& pl, const Precision& prec) {
    if (pl.is_vertical()) {
        Interval d2 = dist2_point_line(p.horizontal(), pl.boundary.point, pl.boundary.dir);
        return iv_asinh(iv_sqrt(d2 / p.z.sq(), prec), prec);
    }
    // sinh d = | |w-c|^2 + t^2 - r^2 | / (2 r t)
    Interval num = (p.horizontal() - pl.boundary.center).norm2() + p.z.sq() - pl.boundary.radius.sq();
    Interval s = num.abs() / (Interval(Rat(2)) * pl.boundary.radius * p.z);
    return iv_asinh(s, prec);
}

PlanePosition classify_planes(const HPlane& p1, const HPlane& p2) {
    if (p1.is_vertical() && p2.is_vertical()) return PlanePosition::Meets;  // share infinity
    if (p1.is_vertical() || p2.is_vertical()) {
        const HPlane& hemi = p1.is_vertical() ? p2 : p1;
        const HPlane& vert = p1.is_vertical() ? p1 : p2;
        Interval q = dist2_point_line(hemi.boundary.center, vert.boundary.point, vert.boundary.dir) -
                     hemi.boundary.radius.sq();
        if (q.certainly_positive()) return PlanePosition::Disjoint;
        if (q.certainly_negative() || q.exactly(Rat(0))) return PlanePosition::Meets;
        return PlanePosition::Indeterminate;
    }
    Interval d2 = (p1.boundary.center - p2.boundary.center).norm2();
    Interval t = (d2 - p1.boundary.radius.sq() - p2.boundary.radius.sq()) /
                 (Interval(Rat(2)) * p1.boundary.radius * p2.boundary.radius);
    if (t.lo() > 1 || t.hi() < -1) return PlanePosition::Disjoint;
    if ((t.lo() > -1 && t.hi() < 1) || t.exactly(Rat(1)) || t.exactly(Rat(-1)))
        return PlanePosition::Meets;
    return PlanePosition::Indeterminate;
}

Interval dist_planes(const HPlane& p1, const HPlane& p2, const Precision& prec) {
    PlanePosition pos = classify_planes(p1, p2);
    if (pos == PlanePosition::Meets)
        throw PreconditionError("planes meet or have non-disjoint boundaries");
    if (pos == PlanePosition::Indeterminate)
        throw IndeterminateError("plane disjointness not certified at current width");
    if (p1.is_vertical() || p2.is_vertical()) {
        const HPlane& hemi = p1.is_vertical() ? p2 : p1;
        const HPlane& vert = p1.is_vertical() ? p1 : p2;
        Interval q = dist2_point_line(hemi.boundary.center, vert.boundary.point, vert.boundary.dir) /
                     hemi.boundary.radius.sq();
        return iv_acosh(iv_sqrt(q, prec), prec);
    }
    Interval d2 = (p1.boundary.center - p2.boundary.center).norm2();
    Interval t = (d2 - p1.boundary.radius.sq() - p2.boundary.radius.sq()) /
                 (Interval(Rat(2)) * p1.boundary.radius * p2.boundary.radius);
    return iv_acosh(t.abs(), prec);
}

PlanePosition classify_geodesic_plane(const Geodesic& g, const HPlane& pl, const Precision& prec) {
    // Shared boundary points mean Meets (asymptotic counts as not disjoint).
    for (const BoundaryPoint* e : {&g.e0, &g.e1}) {
        if (e->infinite) {
            if (pl.is_vertical()) return PlanePosition::Meets;
            continue;
        }
        Interval side = circline_side_value(pl.boundary, e->zeta);
        if (pl.is_vertical()) {
            if (side.exactly(Rat(0))) return PlanePosition::Meets;
            if (side.contains_zero()) return PlanePosition::Indeterminate;
        } else {
            if (side.exactly(Rat(0))) return PlanePosition::Meets;
            if (side.contains_zero()) return PlanePosition::Indeterminate;
        }
    }
    Mat2c m = axis_normalizer(g);
    CircLine image = apply_circline(m, pl.boundary, prec);
    if (image.is_line) {
        // The axis endpoint at infinity lies on every vertical plane boundary.
        return PlanePosition::Meets;
    }
    Interval q = image.center.norm2() - image.radius.sq();
    if (q.certainly_positive()) return PlanePosition::Disjoint;
    if (q.certainly_negative() || q.exactly(Rat(0))) return PlanePosition::Meets;
    return PlanePosition::Indeterminate;
}

Interval dist_geodesic_plane(const Geodesic& g, const HPlane& pl, const Precision& prec) {
    PlanePosition pos = classify_geodesic_plane(g, pl, prec);
    if (pos == PlanePosition::Meets)
        throw PreconditionError("geodesic meets the plane or shares a boundary point");
    if (pos == PlanePosition::Indeterminate)
        throw IndeterminateError("geodesic/plane disjointness not certified at current width");
    Mat2c m = axis_normalizer(g);
    CircLine image = apply_circline(m, pl.boundary, prec);
    // After normalization the plane is a hemisphere missed by the axis; the
    // bound through the separating vertical plane equals acosh(|c|/r).
    return dist_axis_hemisphere(image.center, image.radius, prec);
}

Interval dist_geodesics(const Geodesic& g1, const Geodesic& g2, const Precision& prec) {
    // Boundary sets must be pairwise distinct.
    for (const BoundaryPoint* a : {&g1.e0, &g1.e1})
        for (const BoundaryPoint* b : {&g2.e0, &g2.e1}) {
            Trit distinct = boundary_points_distinct(*a, *b);
            if (distinct == Trit::False)
                throw PreconditionError("geodesics share a boundary point");
            if (distinct == Trit::Indeterminate)
                throw IndeterminateError("geodesic boundaries not certified distinct");
        }
    Mat2c m = axis_normalizer(g1);
    BoundaryPoint i0 = apply_boundary(m, g2.e0);
    BoundaryPoint i1 = apply_boundary(m, g2.e1);
    if (i0.infinite || i1.infinite)
        throw Error(ErrorCode::Internal, "normalized geodesic image unexpectedly infinite");
    Interval cr = cross2(i0.zeta, i1.zeta);
    if (cr.exactly(Rat(0))) {
        // Coplanar with the axis: exact common-perpendicular reduction.
        Interval d = dot2(i0.zeta, i1.zeta);
        if (d.certainly_negative())
            throw PreconditionError("geodesics intersect");
        if (!d.certainly_positive())
            throw IndeterminateError("coplanar geodesic configuration not separated at width");
        Interval a1 = iv_sqrt(i0.zeta.norm2(), prec);
        Interval a2 = iv_sqrt(i1.zeta.norm2(), prec);
        Interval r = ((a2 - a1) / Interval(Rat(2))).abs();
        if (!r.certainly_positive())
            throw IndeterminateError("coplanar geodesics not certified apart at width");
        // sinh d = sqrt(s1 s2) / r
        Interval s = iv_sqrt(a1 * a2 / r.sq(), prec);
        return iv_asinh(s, prec);
    }
    // Skew: separating vertical plane through the axis, parallel to the base
    // chord of the image semicircle.
    Geodesic img(i0, i1);
    HPlane sep = HPlane::vertical(CIv::of(0, 0), i1.zeta - i0.zeta);
    return dist_geodesic_plane(img, sep, prec);
}

Geodesic carrier_geodesic(const GeodesicSegment& s, const Precision& prec) {
    CIv d = s.p1.horizontal() - s.p0.horizontal();
    Interval t2 = d.norm2();
    if (t2.exactly(Rat(0)))
        return Geodesic(BoundaryPoint::finite(s.p0.horizontal()), BoundaryPoint::inf());
    if (t2.contains_zero())
        throw IndeterminateError("segment carrier not certified at current width");
    Interval len = iv_sqrt(t2, prec);
    Interval t0 = (t2 + s.p1.z.sq() - s.p0.z.sq()) / (Interval(Rat(2)) * len);
    Interval rho = iv_sqrt(t0.sq() + s.p0.z.sq(), prec);
    CIv foot0 = s.p0.horizontal() + ((t0 - rho) / len) * d;
    CIv foot1 = s.p0.horizontal() + ((t0 + rho) / len) * d;
    return Geodesic(BoundaryPoint::finite(foot0), BoundaryPoint::finite(foot1));
}

Interval dist_segment_plane(const GeodesicSegment& s, const HPlane& pl, const Precision& prec) {
    // The segment must not touch the plane: both endpoints certified strictly
    // on one common side.
    auto side_at = [&](const UhsPoint& p) -> Interval {
        if (pl.is_vertical()) return cross2(pl.boundary.dir, p.horizontal() - pl.boundary.point);
        return (p.horizontal() - pl.boundary.center).norm2() + p.z.sq() - pl.boundary.radius.sq();
    };
    Interval s0 = side_at(s.p0);
    Interval s1 = side_at(s.p1);
    if (s0.exactly(Rat(0)) || s1.exactly(Rat(0)))
        throw PreconditionError("segment endpoint lies on the plane");
    if (s0.contains_zero() || s1.contains_zero())
        throw IndeterminateError("segment/plane separation not certified at current width");
    if (sgn(s0.lo()) != sgn(s1.lo()))
        throw PreconditionError("segment crosses the plane");

    Geodesic carrier = carrier_geodesic(s, prec);
    PlanePosition pos = classify_geodesic_plane(carrier, pl, prec);
    if (pos == PlanePosition::Disjoint) return dist_geodesic_plane(carrier, pl, prec);
    if (pos == PlanePosition::Indeterminate)
        throw IndeterminateError("carrier/plane position not certified at current width");
    // Carrier meets the plane (or shares a boundary point): the segment
    // distance is realized at an endpoint.
    return iv_min(dist_point_plane(s.p0, pl, prec), dist_point_plane(s.p1, pl, prec));
}

}  // namespace gdc

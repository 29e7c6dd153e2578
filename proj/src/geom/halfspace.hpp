#pragma once

#include "geom/isometry.hpp"

namespace gdc {

// Geodesic of H^3, stored by its boundary pair.  Vertical line iff one
// endpoint is Infinity.  Construction refuses endpoint pairs that cannot be
// certified distinct.
struct Geodesic {
    BoundaryPoint e0, e1;

    Geodesic(BoundaryPoint a, BoundaryPoint b) : e0(std::move(a)), e1(std::move(b)) {
        Trit distinct = boundary_points_distinct(e0, e1);
        if (distinct == Trit::False) throw PreconditionError("geodesic endpoints coincide");
        if (distinct == Trit::Indeterminate)
            throw IndeterminateError("geodesic endpoints not certified distinct");
    }

    bool is_vertical() const { return e0.infinite || e1.infinite; }
    // Finite foot of a vertical line.
    const CIv& foot() const { return e0.infinite ? e1.zeta : e0.zeta; }
};

// Hyperbolic plane: euclidean hemisphere over a circle, or a vertical plane
// over a line of the base plane.
struct HPlane {
    CircLine boundary;

    static HPlane hemisphere(CIv center, Interval radius) {
        if (!radius.certainly_positive())
            throw IndeterminateError("hemisphere radius not certified positive");
        HPlane p;
        p.boundary = CircLine::circle(std::move(center), std::move(radius));
        return p;
    }
    static HPlane vertical(CIv point, CIv dir) {
        if (!dir.norm2().certainly_positive())
            throw IndeterminateError("vertical plane direction not certified nonzero");
        HPlane p;
        p.boundary = CircLine::line(std::move(point), std::move(dir));
        return p;
    }
    static HPlane from_circline(const CircLine& g) {
        return g.is_line ? vertical(g.point, g.dir) : hemisphere(g.center, g.radius);
    }
    bool is_vertical() const { return boundary.is_line; }
};

struct GeodesicSegment {
    UhsPoint p0, p1;
    GeodesicSegment(UhsPoint a, UhsPoint b) : p0(std::move(a)), p1(std::move(b)) {}
};

// The normalization z -> (z - a)/(z - b); sends a to 0 and b to infinity and
// extends to an isometry of H^3.
struct MobiusMap {
    CIv a, b;

    Mat2c matrix() const { return {CIv::of(1, 0), -a, CIv::of(1, 0), -b}; }
    UhsPoint apply(const UhsPoint& p, const Precision& prec) const {
        return apply_uhs(matrix(), p, prec);
    }
    BoundaryPoint apply(const BoundaryPoint& p) const { return apply_boundary(matrix(), p); }
    Geodesic apply(const Geodesic& g) const { return Geodesic(apply(g.e0), apply(g.e1)); }
    HPlane apply(const HPlane& pl, const Precision& prec) const {
        return HPlane::from_circline(apply_circline(matrix(), pl.boundary, prec));
    }
};

MobiusMap mobius_normalize(const BoundaryPoint& a, const BoundaryPoint& b);

// The seven distance reductions.  Every result is a sound enclosure of the
// distance; for the geodesic-plane and segment-plane cases only the lower
// endpoint is certified (the reduction through a containing plane may
// undershoot).  Predicates that cannot be decided at the current width throw
// IndeterminateError; certified contract violations throw PreconditionError.
Interval dist_points(const UhsPoint& p, const UhsPoint& q, const Precision& prec);
Interval dist_point_geodesic(const UhsPoint& p, const Geodesic& g, const Precision& prec);
Interval dist_geodesics(const Geodesic& g1, const Geodesic& g2, const Precision& prec);
Interval dist_point_plane(const UhsPoint& p, const HPlane& pl, const Precision& prec);
Interval dist_planes(const HPlane& p1, const HPlane& p2, const Precision& prec);
Interval dist_geodesic_plane(const Geodesic& g, const HPlane& pl, const Precision& prec);
Interval dist_segment_plane(const GeodesicSegment& s, const HPlane& pl, const Precision& prec);

// Carrier geodesic through the endpoints of a segment.
Geodesic carrier_geodesic(const GeodesicSegment& s, const Precision& prec);

// Relative position of two boundary circles/lines.
enum class PlanePosition { Disjoint, Meets, Indeterminate };
PlanePosition classify_planes(const HPlane& p1, const HPlane& p2);

// Does the geodesic meet the plane?  Decided after normalizing the geodesic
// to the vertical axis.  Shared boundary points report Meets.
PlanePosition classify_geodesic_plane(const Geodesic& g, const HPlane& pl, const Precision& prec);

}  // namespace gdc

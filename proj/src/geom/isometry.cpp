#include "geom/isometry.hpp"

namespace gdc {

Rat Mat2c::sup_dist_to_identity(int sign) const {
    Rat one = sign >= 0 ? Rat(1) : Rat(-1);
    auto entry = [](const CIv& z, const Rat& tr, const Rat& ti) {
        Rat re = std::max((z.re - Interval(tr)).abs().hi(), Rat(0));
        Rat im = std::max((z.im - Interval(ti)).abs().hi(), Rat(0));
        return std::max(re, im);
    };
    Rat m = entry(a, one, Rat(0));
    m = std::max(m, entry(d, one, Rat(0)));
    m = std::max(m, entry(b, Rat(0), Rat(0)));
    m = std::max(m, entry(c, Rat(0), Rat(0)));
    return m;
}

Trit boundary_points_distinct(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.infinite && q.infinite) return Trit::False;
    if (p.infinite != q.infinite) return Trit::True;
    bool re_apart = !p.zeta.re.intersects(q.zeta.re);
    bool im_apart = !p.zeta.im.intersects(q.zeta.im);
    if (re_apart || im_apart) return Trit::True;
    if (p.zeta.is_point() && q.zeta.is_point()) return Trit::False;  // exact coincidence
    return Trit::Indeterminate;
}

UhsPoint apply_uhs(const Mat2c& m, const UhsPoint& p, const Precision& prec) {
    CIv z = p.horizontal();
    Interval t2 = p.z.sq();
    CIv u = m.c * z + m.d;
    Interval den = u.norm2() + m.c.norm2() * t2;
    if (!den.certainly_positive())
        throw IndeterminateError("Moebius denominator not certified nonzero at current width");
    CIv num = (m.a * z + m.b) * u.conj() + t2 * (m.a * m.c.conj());
    Interval abs_det = iv_sqrt(m.det().norm2(), prec);
    Interval height = abs_det * p.z / den;
    if (!height.certainly_positive())
        throw IndeterminateError("image height not certified positive at current width");
    return UhsPoint(num.re / den, num.im / den, height);
}

BoundaryPoint apply_boundary(const Mat2c& m, const BoundaryPoint& p) {
    if (p.infinite) {
        // limit a/c
        if (m.c.exactly(0, 0)) return BoundaryPoint::inf();
        if (m.c.norm2().contains_zero())
            throw IndeterminateError("boundary image of infinity indeterminate");
        return BoundaryPoint::finite(m.a / m.c);
    }
    CIv num = m.a * p.zeta + m.b;
    CIv den = m.c * p.zeta + m.d;
    if (den.exactly(0, 0)) return BoundaryPoint::inf();
    if (den.norm2().contains_zero())
        throw IndeterminateError("boundary image denominator indeterminate");
    return BoundaryPoint::finite(num / den);
}

namespace {

// Image of a circline under z -> 1/z.
CircLine invert_circline(const CircLine& g, const Precision& prec) {
    if (!g.is_line) {
        Interval pow = g.center.norm2() - g.radius.sq();  // power of the origin
        if (pow.exactly(Rat(0))) {
            // Circle through the origin -> line Re(conj(w) * conj(center))... see below.
            // Points satisfy Re(center * w) = 1/2; normal (re c, -im c).
            CIv n = g.center.conj();
            Interval n2 = n.norm2();
            CIv p0{n.re / (Interval(Rat(2)) * n2), n.im / (Interval(Rat(2)) * n2)};
            CIv d{-n.im, n.re};
            return CircLine::line(p0, d);
        }
        if (pow.contains_zero())
            throw IndeterminateError("cannot certify whether circle passes through origin");
        CIv c2 = g.center.conj();
        CIv center{c2.re / pow, c2.im / pow};
        Interval radius = iv_sqrt(g.radius.sq() / pow.sq(), prec);
        return CircLine::circle(center, radius);
    }
    // Line: through origin iff cross(point, dir) == 0.
    Interval cr = cross2(g.point, g.dir);
    if (cr.exactly(Rat(0))) {
        // Line through origin maps to the conjugate line through origin.
        return CircLine::line(CIv::of(0, 0), g.dir.conj());
    }
    if (cr.contains_zero())
        throw IndeterminateError("cannot certify whether line passes through origin");
    // Normal form Re(N w) = h with N = i*dir (conjugated), h = that value at point.
    CIv n{-g.dir.im, g.dir.re};  // euclidean normal of the line
    Interval h = dot2(n, g.point);
    // Image: circle |w - conj(N)/(2h)| = |N| / |2h|.
    CIv nc = n.conj();
    CIv center{nc.re / (Interval(Rat(2)) * h), nc.im / (Interval(Rat(2)) * h)};
    Interval radius = iv_sqrt(n.norm2() / (Interval(Rat(4)) * h.sq()), prec);
    return CircLine::circle(center, radius);
}

// Image under the affine map z -> alpha z + beta.
CircLine affine_circline(const CIv& alpha, const CIv& beta, const CircLine& g,
                         const Precision& prec) {
    if (g.is_line) return CircLine::line(alpha * g.point + beta, alpha * g.dir);
    CIv center = alpha * g.center + beta;
    Interval radius = iv_sqrt(alpha.norm2() * g.radius.sq(), prec);
    return CircLine::circle(center, radius);
}

}  // namespace

CircLine apply_circline(const Mat2c& m, const CircLine& g, const Precision& prec) {
    if (m.c.exactly(0, 0)) {
        CIv alpha = m.a / m.d;
        CIv beta = m.b / m.d;
        return affine_circline(alpha, beta, g, prec);
    }
    if (m.c.norm2().contains_zero())
        throw IndeterminateError("matrix lower-left entry indeterminate near zero");
    // (a z + b)/(c z + d) = a/c + (bc - ad)/c * 1/(c z + d)
    CircLine t = affine_circline(m.c, m.d, g, prec);
    t = invert_circline(t, prec);
    CIv k = (m.b * m.c - m.a * m.d) / m.c;
    CIv shift = m.a / m.c;
    return affine_circline(k, shift, t, prec);
}

Interval circline_side_value(const CircLine& g, const CIv& w) {
    if (g.is_line) return cross2(g.dir, w - g.point);
    return (w - g.center).norm2() - g.radius.sq();
}

Interval dist2_point_line(const CIv& w, const CIv& point, const CIv& dir) {
    Interval cr = cross2(dir, w - point);
    return cr.sq() / dir.norm2();
}

}  // namespace gdc

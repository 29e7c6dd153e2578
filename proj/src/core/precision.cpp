#include "core/precision.hpp"

#include <functional>

namespace gdc {
namespace {

// sqrt of a nonnegative rational, enclosed on the 2^-bits grid via integer
// square roots of the scaled numerator.
Interval sqrt_point(const Rat& x, long bits) {
    if (sgn(x) < 0) throw DomainError("sqrt of negative rational");
    if (sgn(x) == 0) return Interval();
    Rat scaled = rat_mul_2exp(x, 2 * bits);
    Int fl, rem;
    mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), scaled.get_num().get_mpz_t(),
                scaled.get_den().get_mpz_t());
    Int s;
    mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
    Rat lo = rat_mul_2exp(Rat(s), -bits);
    // Exact when x*4^bits is a perfect square.
    if (rem == 0 && s * s == fl) return Interval(lo, lo);
    Rat hi = rat_mul_2exp(Rat(s + 1), -bits);
    return Interval(lo, hi);
}

// 2*atanh(t) for rational t in [0, 1/2), via the odd series with a geometric
// tail bound.  Powers are rounded outward each step to keep bit sizes flat.
Interval two_atanh_point(const Rat& t, long bits) {
    Interval ti = Interval(t).round_out(bits + 8);
    Interval t2 = ti.sq().round_out(bits + 8);
    Interval power = ti;
    Interval sum;
    Rat tail_cut = rat_mul_2exp(Rat(1), -(bits + 6));
    unsigned k = 0;
    while (true) {
        Interval term = power / Interval(Rat(2 * k + 1));
        sum += term;
        sum = sum.round_out(bits + 8);
        // Tail of sum_{j>k} t^{2j+1}/(2j+1) <= t^{2k+3}/((2k+3)(1-t^2)).
        Interval next_power = (power * t2).round_out(bits + 8);
        Rat tail = (next_power.hi() / Rat(2 * k + 3)) / (1 - t2.hi());
        if (tail <= tail_cut) {
            sum = Interval(sum.lo(), sum.hi() + tail);
            break;
        }
        power = next_power;
        ++k;
        if (k > 100000) throw ResourceExceeded("atanh series failed to converge");
    }
    return (Interval(Rat(2)) * sum).round_out(bits + 4);
}

Interval ln2_enclosure(long bits) { return two_atanh_point(Rat(1, 3), bits); }

// log of a positive rational: reduce to [1,2) by a power of two, then the
// atanh series.
Interval log_point(const Rat& x, long bits) {
    if (sgn(x) <= 0) throw DomainError("log of nonpositive value");
    long e = floor_log2(x);
    Rat m = rat_mul_2exp(x, -e);  // in [1, 2)
    Rat t = (m - 1) / (m + 1);    // in [0, 1/3]
    Interval lnm = (t == 0) ? Interval() : two_atanh_point(t, bits);
    if (e == 0) return lnm;
    return (Interval(Rat(e)) * ln2_enclosure(bits + 4) + lnm).round_out(bits);
}

// atan of a rational via the alternating series after reducing |x| under 1/2
// with at most two half-angle steps and the x>1 reflection.
Interval atan_point(const Rat& x, long bits, int depth = 0);

Interval atan_interval(const Interval& a, long bits, int depth) {
    Interval lo = atan_point(a.lo(), bits, depth);
    Interval hi = atan_point(a.hi(), bits, depth);
    return Interval(lo.lo(), hi.hi());
}

Interval atan_point(const Rat& x, long bits, int depth) {
    if (sgn(x) < 0) return -atan_point(-x, bits, depth);
    if (sgn(x) == 0) return Interval();
    if (x > 1) {
        // atan(x) = pi/2 - atan(1/x)
        Precision p;
        p.c = static_cast<unsigned>(bits);
        Interval half_pi = pi_enclosure(p) / Interval(Rat(2));
        return (half_pi - atan_point(1 / x, bits, depth)).round_out(bits);
    }
    if (x > Rat(2, 5)) {
        if (depth >= 3) throw ResourceExceeded("atan reduction failed to shrink argument");
        // atan(x) = 2*atan(x / (1 + sqrt(1+x^2)))
        Interval s = sqrt_point(1 + x * x, bits + 8);
        Interval y = Interval(x) / (Interval(Rat(1)) + s);
        return (Interval(Rat(2)) * atan_interval(y, bits + 4, depth + 1)).round_out(bits);
    }
    // Alternating series sum (-1)^k x^{2k+1} / (2k+1); truncation error is
    // bounded by the first omitted term.
    Interval xi = Interval(x).round_out(bits + 8);
    Interval x2 = xi.sq().round_out(bits + 8);
    Interval power = xi;
    Interval sum;
    Rat tail_cut = rat_mul_2exp(Rat(1), -(bits + 6));
    int sign = 1;
    unsigned k = 0;
    while (true) {
        Interval term = power / Interval(Rat(2 * k + 1));
        sum = (sign > 0) ? sum + term : sum - term;
        sum = sum.round_out(bits + 8);
        power = (power * x2).round_out(bits + 8);
        Rat next = power.hi() / Rat(2 * k + 3);
        if (next <= tail_cut) {
            sum = Interval(sum.lo() - next, sum.hi() + next);
            break;
        }
        sign = -sign;
        ++k;
        if (k > 100000) throw ResourceExceeded("atan series failed to converge");
    }
    return sum;
}

}  // namespace

Interval iv_sqrt(const Interval& a, const Precision& p) {
    if (sgn(a.hi()) < 0) throw DomainError("sqrt of negative interval");
    Rat lo = std::max(Rat(0), a.lo());
    long bits = p.work_bits();
    Interval l = sqrt_point(lo, bits);
    Interval h = sqrt_point(a.hi(), bits);
    return Interval(l.lo(), h.hi());
}

Interval iv_log(const Interval& a, const Precision& p) {
    if (sgn(a.lo()) <= 0) throw DomainError("log requires a positive interval");
    long bits = p.work_bits();
    return Interval(log_point(a.lo(), bits).lo(), log_point(a.hi(), bits).hi());
}

Interval iv_acosh(const Interval& a, const Precision& p) {
    if (a.hi() < 1) throw DomainError("acosh requires hi >= 1");
    Rat lo = std::max(Rat(1), a.lo());
    long bits = p.work_bits();
    auto point = [&](const Rat& x) {
        Interval s = sqrt_point(x * x - 1, bits + 8);
        Interval y = Interval(x) + s;
        return Interval(log_point(y.lo(), bits + 4).lo(), log_point(y.hi(), bits + 4).hi());
    };
    Interval l = (lo == 1) ? Interval() : point(lo);
    Interval h = (a.hi() == 1) ? Interval() : point(a.hi());
    return Interval(l.lo(), h.hi());
}

Interval iv_asinh(const Interval& a, const Precision& p) {
    long bits = p.work_bits();
    // asinh is odd and increasing; evaluate endpoints.
    auto point = [&](const Rat& x) -> Interval {
        if (sgn(x) == 0) return Interval();
        if (sgn(x) < 0) {
            Interval s = sqrt_point(x * x + 1, bits + 8);
            Interval y = Interval(-x) + s;
            Interval r(log_point(y.lo(), bits + 4).lo(), log_point(y.hi(), bits + 4).hi());
            return -r;
        }
        Interval s = sqrt_point(x * x + 1, bits + 8);
        Interval y = Interval(x) + s;
        return Interval(log_point(y.lo(), bits + 4).lo(), log_point(y.hi(), bits + 4).hi());
    };
    Interval l = point(a.lo());
    Interval h = point(a.hi());
    return Interval(l.lo(), h.hi());
}

Interval iv_atan(const Interval& a, const Precision& p) {
    return atan_interval(a, p.work_bits(), 0);
}

Interval pi_enclosure(const Precision& p) {
    long bits = p.work_bits();
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    Interval a = atan_point(Rat(1, 5), bits + 8);
    Interval b = atan_point(Rat(1, 239), bits + 8);
    return (Interval(Rat(16)) * a - Interval(Rat(4)) * b).round_out(bits);
}

Interval iv_acos(const Interval& a, const Precision& p) {
    if (a.lo() > 1 || a.hi() < -1) throw DomainError("acos requires overlap with [-1,1]");
    Rat lo = std::max(Rat(-1), a.lo());
    Rat hi = std::min(Rat(1), a.hi());
    long bits = p.work_bits();
    std::function<Interval(const Rat&)> point = [&](const Rat& x) -> Interval {
        if (x == 1) return Interval();
        if (x == -1) return pi_enclosure(p);
        if (sgn(x) == 0) return pi_enclosure(p) / Interval(Rat(2));
        if (sgn(x) < 0) return pi_enclosure(p) - point(-x);
        Interval s = sqrt_point(1 - x * x, bits + 8);
        Interval q = s / Interval(x);
        return atan_interval(q, bits + 4, 0);
    };
    // Decreasing: the upper endpoint of the result comes from the lower input.
    Interval at_hi = point(hi);
    Interval at_lo = point(lo);
    return Interval(at_hi.lo(), at_lo.hi());
}

Interval iv_arith(ArithOp op, const Interval& a, const Interval* b, const Precision& p) {
    switch (op) {
        case ArithOp::Add: return a + *b;
        case ArithOp::Sub: return a - *b;
        case ArithOp::Mul: return a * *b;
        case ArithOp::Div: return a / *b;
        case ArithOp::Sqrt: return iv_sqrt(a, p);
        case ArithOp::Neg: return -a;
    }
    throw Error(ErrorCode::Internal, "unreachable arithmetic op");
}

}  // namespace gdc

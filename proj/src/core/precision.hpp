#pragma once

#include "core/interval.hpp"

namespace gdc {

// Working accuracy handle.  epsilon = 2^-c bounds the width contributed by
// each elementary-function evaluation; restart() halves epsilon.  Pipelines
// that hit an Indeterminate predicate recompute all derived enclosures at the
// restarted precision; the cap turns a non-terminating refinement loop into
// ResourceExceeded.
struct Precision {
    unsigned c = 64;
    unsigned max_restarts = 24;
    unsigned restarts = 0;

    Precision restart() const {
        if (restarts >= max_restarts)
            throw ResourceExceeded("precision restart cap (" + std::to_string(max_restarts) +
                                   ") exceeded");
        Precision p = *this;
        p.c += 1;
        p.restarts += 1;
        return p;
    }

    Rat epsilon() const { return rat_mul_2exp(Rat(1), -static_cast<long>(c)); }

    // Internal bit budget for elementary functions; the guard keeps composed
    // expressions within epsilon.
    long work_bits() const { return static_cast<long>(c) + 16; }
};

// Elementary functions.  Each returns a sound enclosure; monotonicity is used
// for tight endpoints.  Domain clamps follow the operation contracts: sqrt
// clamps lo to 0 (hi must be >= 0), acosh clamps lo to 1 (hi must be >= 1),
// acos clamps into [-1, 1].
Interval iv_sqrt(const Interval& a, const Precision& p);
Interval iv_log(const Interval& a, const Precision& p);
Interval iv_acosh(const Interval& a, const Precision& p);
Interval iv_asinh(const Interval& a, const Precision& p);
Interval iv_atan(const Interval& a, const Precision& p);
Interval iv_acos(const Interval& a, const Precision& p);
Interval pi_enclosure(const Precision& p);

// Dispatcher mirroring the arithmetic operation contract (b unused for the
// unary ops).
enum class ArithOp { Add, Sub, Mul, Div, Sqrt, Neg };
Interval iv_arith(ArithOp op, const Interval& a, const Interval* b, const Precision& p);

}  // namespace gdc

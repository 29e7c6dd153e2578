#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace gdc {

// Exact rational scalar.  All geometric bookkeeping is done over Q; the only
// places irrational values appear are the enclosure-producing elementary
// functions in precision.hpp.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat_from_string(std::string_view s);
std::string rat_to_string(const Rat& q);

// Nearest points of the 2^-bits grid on either side of x.
Rat dyadic_floor(const Rat& x, long bits);
Rat dyadic_ceil(const Rat& x, long bits);

// x * 2^e
Rat rat_mul_2exp(const Rat& x, long e);

// floor(log2(x)) for x > 0.
long floor_log2(const Rat& x);

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

}  // namespace gdc

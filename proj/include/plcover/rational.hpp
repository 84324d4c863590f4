#ifndef PLCOVER_RATIONAL_HPP
#define PLCOVER_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <utility>
#include <stdexcept>

namespace plcover {

/// Exact rational arithmetic. All decision procedures in this library work
/// over Q; nothing is ever rounded unless explicitly asked for.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse a rational from "p/q" or "p" form. Throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

/// Canonical "p/q" string ("p" when the denominator is 1). Decimal-free.
std::string rat_str(const Rat& r);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

/// Smallest integer >= r.
Int rat_ceil(const Rat& r);

inline int sgn(const Rat& r) { return sgn(r.get_num()); }

/// Round r to a dyadic with denominator 2^bits. Keeps interval algebra from
/// dragging huge denominators through Newton iterations; |result - r| <= 2^-bits.
Rat dyadic_round(const Rat& r, unsigned bits);

/// 2^-n as an exact rational.
Rat pow2_neg(unsigned n);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

} // namespace plcover

#endif

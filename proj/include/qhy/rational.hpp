#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhy {

/// Exact rational scalar. Backed by GMP; always canonical (lowest terms,
/// positive denominator), so equality is plain value equality.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "p" or "p/q" with q > 0.
std::string rat_str(const Rat& r);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
Rat rat_parse(const std::string& s);

inline double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace qhy

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weylkit {

// Exact rational scalar. Backed by GMP; always stored canonically
// (gcd(|num|, den) = 1, den > 0), which GMP arithmetic preserves.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serializes as "p/q", or "p" when q = 1.
std::string rat_to_string(const Rat& r);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

struct wk_error : std::runtime_error {
    enum class code { invalid_input, non_dominant, cap_exceeded, internal };
    code kind;
    wk_error(code k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

}  // namespace weylkit

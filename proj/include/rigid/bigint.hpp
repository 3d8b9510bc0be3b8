#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rigid {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Checked int64 arithmetic for exponent vectors; throws on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

}  // namespace rigid

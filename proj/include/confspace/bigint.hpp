#pragma once

#include <gmpxx.h>

#include <string>

namespace confspace {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::string to_string(const BigRational& v) { return v.get_str(10); }

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input.
BigRational parse_rational(const std::string& text);

inline BigRational make_rational(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace confspace

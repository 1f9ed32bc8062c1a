#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divfree {

// All scalars are exact rationals over arbitrary-precision integers.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

/// Lowest-terms decimal form, "p" or "p/q".
inline std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Combined bit size of numerator and denominator; used for pivot selection.
inline std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace divfree

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flatspan {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator (GMP canonical form). All arithmetic in this
/// project is exact; nothing is ever rounded.
using Rational = mpq_class;

/// Parse "p", "p/q" or "-p/q" (base 10). Rejects a zero denominator and
/// anything else mpq cannot read.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("invalid rational: '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw std::invalid_argument("invalid rational (zero denominator): '" + s + "'");
  }
  q.canonicalize();
  return q;
}

/// Canonical form: "p" when integral, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Build num/den in canonical form. The mpq_class(num, den) constructor
/// does not reduce, and GMP comparisons require canonical operands, so
/// every fraction assembled from parts must go through canonicalize().
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace detail {

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

inline std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x61c88647u;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  }
  return h;
}

}  // namespace detail

inline std::size_t hash_rational(const Rational& q) {
  return detail::hash_combine(detail::hash_mpz(mpq_numref(q.get_mpq_t())),
                              detail::hash_mpz(mpq_denref(q.get_mpq_t())));
}

/// Three-way comparison (sign of a - b).
inline int compare(const Rational& a, const Rational& b) {
  return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

}  // namespace flatspan

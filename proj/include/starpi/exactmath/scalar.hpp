#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace starpi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using BigInt = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "7", "-3/2", "+4/6" into a canonical rational.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw Error("empty rational literal");
  Scalar q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }
inline bool is_one(const Scalar& q) { return q == 1; }

/// Deterministic generator used for every randomized routine.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; modulo mapping keeps results identical
/// across standard library implementations.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Random rational with |numerator| <= bound and 1 <= denominator <= bound.
inline Scalar random_scalar(Rng& rng, std::int64_t bound) {
  if (bound < 1) throw Error("coefficient bound must be >= 1");
  Scalar q(static_cast<long>(uniform_int(rng, -bound, bound)),
           static_cast<unsigned long>(uniform_int(rng, 1, bound)));
  q.canonicalize();
  return q;
}

} // namespace starpi

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace paraclass {

// Exact rational scalar used in the default computation mode.
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural problems (wrong sizes, malformed documents).
struct DimensionError : Error {
  using Error::Error;
};

// Violated mathematical invariants (bad structure, inadmissible tensor,
// operator family breaking its constraints).
struct ValidationError : Error {
  using Error::Error;
};

// No usable pivot / no normalizable basis vector.
struct DegeneracyError : Error {
  using Error::Error;
};

template <class K>
struct FieldInfo;

template <>
struct FieldInfo<Rat> {
  static constexpr bool exact = true;
};

template <>
struct FieldInfo<double> {
  static constexpr bool exact = false;
};

inline bool is_zero(const Rat& x, const Rat& = Rat(0)) { return sgn(x) == 0; }
inline bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }

inline Rat abs_val(const Rat& x) { return abs(x); }
inline double abs_val(double x) { return std::fabs(x); }

// Exact square root of a nonnegative rational, when it exists.
std::optional<Rat> exact_sqrt(const Rat& x);

// Parses "p/q" or "p"; canonicalizes; rejects q = 0 and malformed text.
Rat parse_rational(const std::string& text);

std::string format_scalar(const Rat& x);
std::string format_scalar(double x);

template <class K>
K scalar_from_string(const std::string& text);

template <>
inline Rat scalar_from_string<Rat>(const std::string& text) {
  return parse_rational(text);
}

template <>
inline double scalar_from_string<double>(const std::string& text) {
  Rat q = parse_rational(text);
  return q.get_d();
}

}  // namespace paraclass

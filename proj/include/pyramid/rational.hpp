#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pyramid {

using Rational = boost::multiprecision::mpq_rational;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a constructive step fails its own exact check.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers print bare, everything else as p/q.
std::string format_rational(const Rational& q);

// Accepts "p", "-p" and "p/q". Throws InputError otherwise.
Rational parse_rational(const std::string& text);

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) {
  if (q == 0) throw InputError("zero denominator");
  return Rational(p) / Rational(q);
}

}  // namespace pyramid

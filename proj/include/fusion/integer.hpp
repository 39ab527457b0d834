#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace fusion {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& x) { return x.str(); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

// Floor division; cpp_int division truncates toward zero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

}  // namespace fusion

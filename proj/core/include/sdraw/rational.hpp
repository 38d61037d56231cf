#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sdraw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long long px, long long py) : x(px), y(py) {}

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Rational make_rational(long long num, long long den) {
  return Rational(BigInt(num), BigInt(den));
}

/// Exact conversion of a finite double.
Rational rational_from_double(double v);

/// Nearest rational with the given power-of-two denominator.
Rational round_to_grid(double v, unsigned bits);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r);

}  // namespace sdraw

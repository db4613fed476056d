#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace slicesched {

/// Exact rational number used for all rates, capacities and queue masses.
/// Floating point only ever appears inside the convex solver; everything
/// crossing a module boundary is a Rat.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

/// Largest integer <= r.
inline BigInt rat_floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline BigInt rat_ceil(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

inline long rat_floor_long(const Rat& r) { return static_cast<long>(rat_floor(r)); }
inline long rat_ceil_long(const Rat& r) { return static_cast<long>(rat_ceil(r)); }

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses "p/q", "p" or a plain integer string. Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

/// Renders as "p/q", or just "p" for integers.
inline std::string format_rational(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

/// Fixed-point decimal rendering with `digits` places, rounded half-up.
/// Deterministic (computed on exact integers), used for CSV output.
inline std::string format_decimal(const Rat& r, int digits = 6) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;
  BigInt scaled = rat_floor(Rat(a * scale * 2 + 1) / 2);  // round half up
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string fs = frac.str();
  fs.insert(fs.begin(), digits - static_cast<int>(fs.size()), '0');
  std::string out = (neg ? "-" : "") + whole.str();
  if (digits > 0) out += "." + fs;
  return out;
}

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// closed interval [lo, hi]. Stern-Brocot descent; requires lo <= hi.
inline Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  // Any integer in range wins.
  BigInt c = rat_ceil(lo);
  if (Rat(c) <= hi) return Rat(c);
  BigInt fl = rat_floor(lo);
  // Both endpoints strictly inside (fl, fl+1).
  Rat sub = simplest_rational_in(Rat(1) / (hi - fl), Rat(1) / (lo - fl));
  return Rat(fl) + Rat(1) / sub;
}

/// Rationalizes a double: simplest rational within +-window of x.
inline Rat rationalize(double x, double window = 1e-6) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite value");
  auto to_rat = [](double v) {
    // Exact binary expansion of the double.
    int exp = 0;
    double m = std::frexp(v, &exp);
    BigInt num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rat r(num);
    if (exp > 0)
      r *= Rat(BigInt(1) << exp);
    else if (exp < 0)
      r /= Rat(BigInt(1) << -exp);
    return r;
  };
  return simplest_rational_in(to_rat(x - window), to_rat(x + window));
}

}  // namespace slicesched

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace homp {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// p/q, or just p when q == 1.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).convert_to<std::string>();
  if (denominator(r) != 1) s += "/" + denominator(r).convert_to<std::string>();
  return s;
}

// Best rational approximation of x with |x - p/q| <= tol, by continued
// fractions. Values within tol of a short rational (0, 1, -3/2, ...)
// collapse onto it exactly; this is what keeps structurally-zero LP
// coefficients exactly zero.
inline Rat rationalize(double x, double tol = 1e-12) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite value");
  if (std::abs(x) <= tol) return Rat(0);
  const bool neg = x < 0;
  double v = neg ? -x : x;

  // convergents of the continued fraction of v
  BigInt p_prev = 1, q_prev = 0;  // h_{-1}, k_{-1}
  BigInt p = BigInt(static_cast<long long>(std::floor(v)));
  BigInt q = 1;
  double frac = v - std::floor(v);
  for (int it = 0; it < 64; ++it) {
    double approx = p.convert_to<double>() / q.convert_to<double>();
    if (std::abs(v - approx) <= tol) break;
    if (frac <= 0) break;
    double inv = 1.0 / frac;
    if (inv > 9.0e15) break;  // exhausted double precision
    long long a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    BigInt pn = BigInt(a) * p + p_prev;
    BigInt qn = BigInt(a) * q + q_prev;
    p_prev = p; q_prev = q;
    p = pn; q = qn;
  }
  Rat r(p, q);
  return neg ? -r : r;
}

}  // namespace homp

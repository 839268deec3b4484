#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace factorium {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRational& r) { return boost::multiprecision::denominator(r); }

/// Canonical rational formatting: "p/q" in lowest terms, "p" when q == 1.
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& n);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
BigRational parse_rational(const std::string& s);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// gcd over Q: the positive generator of aZ + bZ. gcd_rational(1, 1/3) = 1/3.
BigRational gcd_rational(const BigRational& a, const BigRational& b);

/// floor(x) as an integer.
BigInt floor_rational(const BigRational& x);

/// Largest n >= 0 with n^k <= x; requires x >= 0, k >= 1. Exact (Newton on integers).
BigInt integer_kth_root(const BigInt& x, unsigned k);

/// floor(p^(a/b)) for p >= 0 and a/b >= 0, exact.
BigInt floor_pow_rational(const BigInt& p, const BigRational& exponent);

BigInt factorial(unsigned n);

BigInt pow_int(const BigInt& base, unsigned exp);

/// x^n for integer n (n may be negative; x != 0 then).
BigRational pow_rational(const BigRational& x, long n);

/// Prime factorization by trial division; adequate for the small rationals
/// appearing as deformation parameters. Returns (prime, exponent) pairs for
/// the positive rational r = prod p^e, exponents in Z \ {0}.
std::vector<std::pair<BigInt, long>> factor_rational(const BigRational& r);

}  // namespace factorium

#pragma once

#include "factorium/rational.hpp"

namespace factorium {

enum class Round { Down, Up };

/// Dyadic rational m * 2^e. Addition/subtraction/multiplication are exact;
/// rounding is explicit and directed, which is what makes the interval layer
/// sound. Normal form: mantissa odd, or (0, 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : m_(v) { normalize(); }  // NOLINT: implicit by design
  Dyadic(BigInt m, long e) : m_(std::move(m)), e_(e) { normalize(); }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1); }

  /// Nearest dyadic with `prec` significant bits on the chosen side of x.
  static Dyadic from_rational(const BigRational& x, long prec, Round dir);

  const BigInt& mantissa() const { return m_; }
  long exponent() const { return e_; }
  bool is_zero() const { return m_ == 0; }
  int sign() const { return m_ == 0 ? 0 : (m_ < 0 ? -1 : 1); }

  Dyadic operator-() const { return Dyadic(-m_, e_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  Dyadic mul2(long k) const { return is_zero() ? *this : Dyadic(m_, e_ + k); }

  /// Directed rounding to `prec` significant bits (no-op if already at most prec bits).
  Dyadic round(long prec, Round dir) const;

  /// Directed division (exact division by powers of two stays exact).
  static Dyadic div(const Dyadic& a, const Dyadic& b, long prec, Round dir);

  BigInt floor() const;
  BigInt ceil() const;
  BigRational to_rational() const;
  /// Number of significant bits of the mantissa (0 for zero).
  long bit_length() const;
  /// e with |x| < 2^e (0 for zero): position of the leading bit + exponent.
  long magnitude_exponent() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

  static int cmp(const Dyadic& a, const Dyadic& b);

  /// Decimal rendering with the given number of fractional digits, truncated.
  std::string to_decimal_string(int digits = 12) const;

 private:
  void normalize();
  BigInt m_ = 0;
  long e_ = 0;
};

}  // namespace factorium

#pragma once

#include "factorium/dyadic.hpp"

#include <functional>

namespace factorium {

/// Error raised when a computation cannot reach the requested certainty
/// within its precision cap (floors straddling an integer, sign resolution).
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a value leaves the representable exponent range.
struct MagnitudeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] with dyadic endpoints. Every operation returns an
/// interval containing the exact result; endpoints are rounded outward to the
/// stated precision.
class RealInterval {
 public:
  RealInterval() : prec_(64) {}
  RealInterval(Dyadic lo, Dyadic hi, long prec);

  static RealInterval point(const Dyadic& d, long prec) { return RealInterval(d, d, prec); }
  static RealInterval exact(const BigRational& x, long prec);
  static RealInterval zero(long prec) { return point(Dyadic::zero(), prec); }

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  long precision() const { return prec_; }

  Dyadic width() const { return hi_ - lo_; }
  BigRational width_rational() const { return width().to_rational(); }
  Dyadic midpoint() const { return (lo_ + hi_).mul2(-1); }

  bool contains(const BigRational& x) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains_interval(const RealInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  /// Certified sign: -1, 0 (cannot decide: straddles), +1.
  int sign_certified() const;

  bool certainly_less(const BigRational& x) const { return hi_.to_rational() < x; }
  bool certainly_greater(const BigRational& x) const { return lo_.to_rational() > x; }
  bool disjoint_from(const RealInterval& o) const { return hi_ < o.lo_ || o.hi_ < lo_; }

  RealInterval operator-() const { return RealInterval(-hi_, -lo_, prec_); }
  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  /// Division; requires 0 not in b.
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);

  RealInterval add_error(const Dyadic& eps) const {
    return RealInterval(lo_ - eps, hi_ + eps, prec_);
  }
  RealInterval scale2(long k) const { return RealInterval(lo_.mul2(k), hi_.mul2(k), prec_); }
  RealInterval rounded(long prec) const {
    return RealInterval(lo_.round(prec, Round::Down), hi_.round(prec, Round::Up), prec);
  }
  RealInterval intersect(const RealInterval& o) const;
  RealInterval hull(const RealInterval& o) const;

  std::string to_string() const;

 private:
  Dyadic lo_, hi_;
  long prec_;
};

RealInterval mul_rational(const RealInterval& a, const BigRational& c);

/// sqrt with directed rounding; requires lo >= 0 (small negative lo from
/// outward rounding is clamped to 0).
RealInterval interval_sqrt(const RealInterval& x, long prec);

/// Certified floor: refines `eval` by doubling precision until the enclosure
/// does not straddle an integer; throws PrecisionError past `max_prec`.
BigInt floor_certified(const std::function<RealInterval(long)>& eval, long start_prec,
                       long max_prec);

/// Certified sign with the same retry discipline.
int sign_certified(const std::function<RealInterval(long)>& eval, long start_prec, long max_prec);

}  // namespace factorium

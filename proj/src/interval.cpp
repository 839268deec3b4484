#include "factorium/interval.hpp"

#include <functional>

namespace factorium {

RealInterval::RealInterval(Dyadic lo, Dyadic hi, long prec)
    : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
  if (hi_ < lo_) throw std::logic_error("RealInterval: lo > hi");
}

RealInterval RealInterval::exact(const BigRational& x, long prec) {
  Dyadic lo = Dyadic::from_rational(x, prec, Round::Down);
  Dyadic hi = Dyadic::from_rational(x, prec, Round::Up);
  return RealInterval(lo, hi, prec);
}

bool RealInterval::contains(const BigRational& x) const {
  return lo_.to_rational() <= x && x <= hi_.to_rational();
}

int RealInterval::sign_certified() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return 0;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  long p = std::min(a.prec_, b.prec_);
  return RealInterval((a.lo_ + b.lo_).round(p, Round::Down), (a.hi_ + b.hi_).round(p, Round::Up),
                      p);
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) { return a + (-b); }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  long p = std::min(a.prec_, b.prec_);
  const Dyadic cands[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  Dyadic lo = cands[0], hi = cands[0];
  for (int i = 1; i < 4; ++i) {
    if (cands[i] < lo) lo = cands[i];
    if (cands[i] > hi) hi = cands[i];
  }
  return RealInterval(lo.round(p, Round::Down), hi.round(p, Round::Up), p);
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by interval containing 0");
  long p = std::min(a.prec_, b.prec_);
  Dyadic c1 = Dyadic::div(a.lo_, b.lo_, p, Round::Down);
  Dyadic c2 = Dyadic::div(a.lo_, b.hi_, p, Round::Down);
  Dyadic c3 = Dyadic::div(a.hi_, b.lo_, p, Round::Down);
  Dyadic c4 = Dyadic::div(a.hi_, b.hi_, p, Round::Down);
  Dyadic lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Dyadic u1 = Dyadic::div(a.lo_, b.lo_, p, Round::Up);
  Dyadic u2 = Dyadic::div(a.lo_, b.hi_, p, Round::Up);
  Dyadic u3 = Dyadic::div(a.hi_, b.lo_, p, Round::Up);
  Dyadic u4 = Dyadic::div(a.hi_, b.hi_, p, Round::Up);
  Dyadic hi = std::max(std::max(u1, u2), std::max(u3, u4));
  return RealInterval(lo, hi, p);
}

RealInterval RealInterval::intersect(const RealInterval& o) const {
  Dyadic l = std::max(lo_, o.lo_);
  Dyadic h = std::min(hi_, o.hi_);
  if (h < l) throw std::logic_error("RealInterval::intersect: empty");
  return RealInterval(l, h, std::max(prec_, o.prec_));
}

RealInterval RealInterval::hull(const RealInterval& o) const {
  return RealInterval(std::min(lo_, o.lo_), std::max(hi_, o.hi_), std::min(prec_, o.prec_));
}

std::string RealInterval::to_string() const {
  return "[" + lo_.to_decimal_string() + ", " + hi_.to_decimal_string() + "]";
}

RealInterval mul_rational(const RealInterval& a, const BigRational& c) {
  if (c == 0) return RealInterval::zero(a.precision());
  RealInterval ci = RealInterval::exact(c, a.precision() + 8);
  return a * ci;
}

RealInterval interval_sqrt(const RealInterval& x, long prec) {
  if (x.hi().sign() < 0) throw std::domain_error("interval_sqrt: negative interval");
  auto sqrt_dir = [prec](const Dyadic& d, Round dir) {
    if (d.sign() <= 0) return Dyadic::zero();
    // represent d = m * 2^e with e even, take integer sqrt of m scaled to 2*prec bits
    BigInt m = d.mantissa();
    long e = d.exponent();
    long scale = 2 * (prec + 4);
    m <<= scale;
    e -= scale;
    if (e % 2 != 0) {
      m <<= 1;
      e -= 1;
    }
    BigInt r = integer_kth_root(m, 2);
    bool exact = r * r == m;
    if (!exact && dir == Round::Up) ++r;
    return Dyadic(r, e / 2).round(prec, dir);
  };
  Dyadic lo = sqrt_dir(x.lo(), Round::Down);
  Dyadic hi = sqrt_dir(x.hi(), Round::Up);
  return RealInterval(lo, hi, prec);
}

BigInt floor_certified(const std::function<RealInterval(long)>& eval, long start_prec,
                       long max_prec) {
  for (long p = start_prec; p <= max_prec; p *= 2) {
    RealInterval v = eval(p);
    BigInt flo = v.lo().floor();
    BigInt fhi = v.hi().floor();
    if (flo == fhi) return flo;
    // hi exactly an integer with lo just below it still straddles; refine
  }
  throw PrecisionError("floor_certified: interval straddles an integer at precision cap " +
                       std::to_string(max_prec));
}

int sign_certified(const std::function<RealInterval(long)>& eval, long start_prec, long max_prec) {
  for (long p = start_prec; p <= max_prec; p *= 2) {
    int s = eval(p).sign_certified();
    if (s != 0) return s;
  }
  throw PrecisionError("sign_certified: sign unresolved at precision cap " +
                       std::to_string(max_prec));
}

}  // namespace factorium

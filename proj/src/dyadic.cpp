#include "factorium/dyadic.hpp"

#include <boost/multiprecision/integer.hpp>

namespace factorium {

namespace {
long lsb_index(const BigInt& m) { return static_cast<long>(boost::multiprecision::lsb(m)); }
long msb_index(const BigInt& m) { return static_cast<long>(boost::multiprecision::msb(m)); }
}  // namespace

void Dyadic::normalize() {
  if (m_ == 0) {
    e_ = 0;
    return;
  }
  BigInt a = boost::multiprecision::abs(m_);
  long k = lsb_index(a);
  if (k > 0) {
    m_ >>= k;
    e_ += k;
  }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.e_, b.e_);
  BigInt m = (a.m_ << (a.e_ - e)) + (b.m_ << (b.e_ - e));
  return Dyadic(std::move(m), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.m_ * b.m_, a.e_ + b.e_); }

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  Dyadic d = a - b;
  return d.sign();
}

long Dyadic::bit_length() const {
  if (m_ == 0) return 0;
  return msb_index(boost::multiprecision::abs(m_)) + 1;
}

long Dyadic::magnitude_exponent() const {
  if (m_ == 0) return 0;
  return bit_length() + e_;
}

Dyadic Dyadic::round(long prec, Round dir) const {
  if (prec < 1) prec = 1;
  long bl = bit_length();
  if (bl <= prec) return *this;
  long drop = bl - prec;
  BigInt q = m_ >> drop;  // arithmetic shift: floors toward -inf
  bool exact = (q << drop) == m_;
  if (!exact && dir == Round::Up) ++q;
  return Dyadic(std::move(q), e_ + drop);
}

Dyadic Dyadic::from_rational(const BigRational& x, long prec, Round dir) {
  if (x == 0) return Dyadic();
  BigInt p = num(x), q = den(x);
  if (q == 1) return Dyadic(p, 0).round(prec, dir);
  // scale so the quotient carries prec+2 significant bits
  long pb = msb_index(boost::multiprecision::abs(p));
  long qb = msb_index(q);
  long shift = prec + 2 - (pb - qb);
  if (shift < 0) shift = 0;
  BigInt scaled = p << shift;
  BigInt quot = scaled / q;
  bool exact = quot * q == scaled;
  if (!exact) {
    // integer division truncates toward zero; fix to directed rounding
    if (scaled < 0) {
      if (dir == Round::Down) --quot;
    } else {
      if (dir == Round::Up) ++quot;
    }
  }
  return Dyadic(std::move(quot), -shift).round(prec, dir);
}

Dyadic Dyadic::div(const Dyadic& a, const Dyadic& b, long prec, Round dir) {
  if (b.is_zero()) throw std::domain_error("Dyadic::div by zero");
  if (a.is_zero()) return Dyadic();
  BigRational r = BigRational(a.m_) / BigRational(b.m_);
  Dyadic d = from_rational(r, prec + 2, dir);
  return d.mul2(a.e_ - b.e_).round(prec, dir);
}

BigInt Dyadic::floor() const {
  if (e_ >= 0) return m_ << e_;
  BigInt q = m_ >> (-e_);  // floors toward -inf
  return q;
}

BigInt Dyadic::ceil() const { return -((-*this).floor()); }

BigRational Dyadic::to_rational() const {
  if (e_ >= 0) return BigRational(m_ << e_);
  return BigRational(m_, BigInt(1) << (-e_));
}

std::string Dyadic::to_decimal_string(int digits) const {
  BigRational r = to_rational();
  bool neg = r < 0;
  if (neg) r = -r;
  BigInt scale = pow_int(10, static_cast<unsigned>(digits));
  BigInt v = (num(r) * scale) / den(r);
  BigInt ip = v / scale, fp = v % scale;
  std::string f = fp.str();
  f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
  return (neg ? "-" : "") + ip.str() + "." + f;
}

}  // namespace factorium

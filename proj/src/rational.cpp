#include "factorium/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace factorium {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const BigRational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

BigRational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return BigRational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

BigRational gcd_rational(const BigRational& a, const BigRational& b) {
  if (a == 0) return b < 0 ? BigRational(-b) : b;
  if (b == 0) return a < 0 ? BigRational(-a) : a;
  // gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2)
  BigInt g = gcd(num(a) * den(b), num(b) * den(a));
  return BigRational(g, den(a) * den(b));
}

BigInt floor_rational(const BigRational& x) {
  BigInt q = num(x) / den(x);
  if (x < 0 && q * den(x) != num(x)) --q;
  return q;
}

BigInt integer_kth_root(const BigInt& x, unsigned k) {
  if (x < 0) throw std::domain_error("integer_kth_root: negative radicand");
  if (k == 0) throw std::domain_error("integer_kth_root: k = 0");
  if (x == 0 || x == 1 || k == 1) return x;
  // initial guess from bit length
  std::size_t bits = boost::multiprecision::msb(x) + 1;
  BigInt guess = BigInt(1) << (bits / k + 1);
  BigInt prev = -1;
  while (guess != prev) {
    prev = guess;
    BigInt gk1 = pow_int(guess, k - 1);
    guess = ((k - 1) * guess + x / gk1) / k;
    if (guess > prev) break;  // Newton from above is monotone; bail on oscillation
  }
  while (pow_int(prev, k) > x) --prev;
  while (pow_int(prev + 1, k) <= x) ++prev;
  return prev;
}

BigInt floor_pow_rational(const BigInt& p, const BigRational& exponent) {
  if (p < 0) throw std::domain_error("floor_pow_rational: negative base");
  if (exponent < 0) throw std::domain_error("floor_pow_rational: negative exponent");
  BigInt a = num(exponent);
  BigInt b = den(exponent);
  if (a > 1000000 || b > 1000000) throw std::domain_error("floor_pow_rational: exponent too large");
  BigInt pa = pow_int(p, static_cast<unsigned>(a));
  return integer_kth_root(pa, static_cast<unsigned>(b));
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

BigRational pow_rational(const BigRational& x, long n) {
  if (n == 0) return 1;
  if (n < 0) {
    if (x == 0) throw std::domain_error("pow_rational: 0^negative");
    return 1 / pow_rational(x, -n);
  }
  BigRational r = 1, b = x;
  unsigned long e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<BigInt, long>> factor_rational(const BigRational& r) {
  if (r <= 0) throw std::domain_error("factor_rational: nonpositive input");
  std::vector<std::pair<BigInt, long>> out;
  auto add = [&out](const BigInt& p, long e) {
    for (auto& pe : out) {
      if (pe.first == p) {
        pe.second += e;
        return;
      }
    }
    out.emplace_back(p, e);
  };
  auto factor_int = [&add](BigInt n, long sign) {
    BigInt d = 2;
    while (d * d <= n) {
      long e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e) add(d, sign * e);
      d += (d == 2) ? 1 : 2;
    }
    if (n > 1) add(n, sign);
  };
  factor_int(num(r), +1);
  factor_int(den(r), -1);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace factorium

#include "factorium/transcendental.hpp"

#include <map>
#include <mutex>

namespace factorium {

namespace {

constexpr long kGuard = 48;
constexpr long kMaxExpArg = 1L << 40;

// ---- fixed-point Machin series ------------------------------------------
//
// Returns A with |A*2^-W - atan(1/m)| <= (2K+2)*2^-W, K = term count.
// All divisions floor; per-term error <= 2 ulp, truncation <= 1 ulp.
BigInt atan_recip_fixed(unsigned m, long W, long& ulp_err) {
  BigInt scale = BigInt(1) << W;
  BigInt m2 = BigInt(m) * m;
  BigInt power = scale / m;  // 2^W / m^(2k+1)
  BigInt sum = 0;
  long k = 0;
  while (power != 0) {
    BigInt term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= m2;
    ++k;
  }
  ulp_err = 2 * k + 2;
  return sum;
}

struct CacheKey {
  long prec;
  bool operator<(const CacheKey& o) const { return prec < o.prec; }
};

RealInterval compute_pi(long prec) {
  long W = prec + kGuard;
  long e5 = 0, e239 = 0;
  BigInt a5 = atan_recip_fixed(5, W, e5);
  BigInt a239 = atan_recip_fixed(239, W, e239);
  BigInt v = 16 * a5 - 4 * a239;
  BigInt err = 16 * e5 + 4 * e239;
  Dyadic lo = Dyadic(v - err, -W).round(prec, Round::Down);
  Dyadic hi = Dyadic(v + err, -W).round(prec, Round::Up);
  return RealInterval(lo, hi, prec);
}

// log 2 = 2 atanh(1/3); positive series, remainder < (9/8) * next term.
RealInterval compute_log2(long prec) {
  long W = prec + kGuard;
  BigInt scale = BigInt(1) << W;
  BigInt power = scale / 3;
  BigInt sum = 0;
  long k = 0;
  while (power != 0) {
    sum += power / (2 * k + 1);
    power /= 9;
    ++k;
  }
  BigInt err = 2 * k + 4;  // floors + truncation, doubled below
  BigInt v = 2 * sum;
  err *= 2;
  Dyadic lo = Dyadic(v - err, -W).round(prec, Round::Down);
  Dyadic hi = Dyadic(v + err, -W).round(prec, Round::Up);
  return RealInterval(lo, hi, prec);
}

template <typename F>
RealInterval cached(std::map<long, RealInterval>& cache, std::mutex& mu, long prec, F&& compute) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  RealInterval v = compute(prec);
  cache.emplace(prec, v);
  return v;
}

std::map<long, RealInterval> g_pi_cache;       // NOLINT
std::map<long, RealInterval> g_log2_cache;     // NOLINT
std::mutex g_pi_mu, g_log2_mu;                 // NOLINT

// exp on a point argument, returned as an enclosure at working precision.
RealInterval exp_point(const Dyadic& x, long prec) {
  long W = prec + kGuard;
  if (x.is_zero()) return RealInterval::point(Dyadic::one(), prec);
  if (x.magnitude_exponent() > 41)
    throw MagnitudeOverflow("eval_exp: magnitude overflow, |x| exceeds exponent range");

  RealInterval ln2 = eval_log2(W);
  // n with |x - n log2| <= 0.36: n = round(x / log2)
  BigRational approx = x.to_rational() / ln2.midpoint().to_rational();
  BigInt n = floor_rational(approx + BigRational(1, 2));
  if (boost::multiprecision::abs(n) > kMaxExpArg)
    throw MagnitudeOverflow("eval_exp: reduced exponent out of range");
  long n_long = n.convert_to<long>();

  RealInterval r = RealInterval::point(x, W) - mul_rational(ln2, BigRational(n));
  // |r| <= 0.5 + slack; Taylor for e^r
  RealInterval sum = RealInterval::exact(1, W);
  RealInterval term = RealInterval::exact(1, W);
  long K = 0;
  // stop once 0.6^(K+1)/(K+1)! * 2 < 2^-W
  BigRational bound = BigRational(3, 5);
  BigRational eps(BigInt(1), BigInt(1) << W);
  while (2 * bound > eps) {
    ++K;
    term = (term * r).rounded(W);
    term = mul_rational(term, BigRational(1, K)).rounded(W);
    sum = sum + term;
    bound = bound * BigRational(3, 5) / (K + 1);
    if (K > 4 * W + 64) break;  // unreachable safety stop
  }
  Dyadic rem = Dyadic::from_rational(2 * bound, 32, Round::Up);
  RealInterval res = sum.add_error(rem);
  return res.scale2(n_long).rounded(prec);
}

// log on a positive point argument.
RealInterval log_point(const Dyadic& x, long prec) {
  if (x.sign() <= 0) throw std::domain_error("eval_log: nonpositive argument");
  long W = prec + kGuard;
  long bl = x.bit_length();
  // m' = x scaled into [1,2): x = m' * 2^(e+bl-1)
  Dyadic mprime(x.mantissa(), -(bl - 1));
  long pow2 = x.exponent() + bl - 1;
  BigRational mr = mprime.to_rational();
  BigRational y = (mr - 1) / (mr + 1);  // in [0, 1/3)
  if (y == 0) {
    // power of two
    RealInterval res = RealInterval::zero(W);
    if (pow2 != 0) res = mul_rational(eval_log2(W), BigRational(pow2));
    return res.rounded(prec);
  }
  RealInterval yi = RealInterval::exact(y, W);
  RealInterval y2 = (yi * yi).rounded(W);
  RealInterval sum = RealInterval::zero(W);
  RealInterval pw = yi;
  long k = 0;
  BigRational ybound(1, 3);
  BigRational tb = ybound;
  BigRational eps(BigInt(1), BigInt(1) << W);
  while (tb > eps) {
    sum = sum + mul_rational(pw, BigRational(1, 2 * k + 1));
    pw = (pw * y2).rounded(W);
    tb = tb * ybound * ybound;
    ++k;
    if (k > W) break;
  }
  // remainder of sum_{j>=k} y^(2j+1)/(2j+1) <= y^(2k+1) * 9/8
  Dyadic rem = Dyadic::from_rational(tb * BigRational(9, 8), 32, Round::Up);
  RealInterval res = sum.scale2(1).add_error(rem);
  if (pow2 != 0) res = res + mul_rational(eval_log2(W), BigRational(pow2));
  return res.rounded(prec);
}

}  // namespace

RealInterval eval_pi(long prec) { return cached(g_pi_cache, g_pi_mu, prec, compute_pi); }

RealInterval eval_log2(long prec) { return cached(g_log2_cache, g_log2_mu, prec, compute_log2); }

RealInterval eval_exp(const RealInterval& x, long prec) {
  RealInterval lo = exp_point(x.lo(), prec);
  RealInterval hi = exp_point(x.hi(), prec);
  return RealInterval(lo.lo(), hi.hi(), prec);
}

RealInterval eval_exp(const BigRational& x, long prec) {
  if (prec < 8) throw std::invalid_argument("eval_exp: precision must be >= 8");
  return eval_exp(RealInterval::exact(x, prec + kGuard), prec);
}

RealInterval eval_log(const RealInterval& x, long prec) {
  RealInterval lo = log_point(x.lo(), prec);
  RealInterval hi = log_point(x.hi(), prec);
  return RealInterval(lo.lo(), hi.hi(), prec);
}

RealInterval eval_log(const BigRational& x, long prec) {
  if (x <= 0) throw std::domain_error("eval_log: nonpositive rational");
  return eval_log(RealInterval::exact(x, prec + kGuard), prec);
}

RealInterval eval_cos(const RealInterval& x, long prec) {
  long W = prec + kGuard;
  RealInterval one = RealInterval::exact(1, prec);
  RealInterval minus_one = RealInterval::exact(-1, prec);
  RealInterval box = RealInterval(minus_one.lo(), one.hi(), prec);
  if (x.width_rational() > 7) return box;

  RealInterval pi = eval_pi(W);
  RealInterval two_pi = pi.scale2(1);
  BigRational approx = x.midpoint().to_rational() / two_pi.midpoint().to_rational();
  BigInt n = floor_rational(approx + BigRational(1, 2));
  RealInterval m = RealInterval(x.lo(), x.hi(), W) - mul_rational(two_pi, BigRational(n));
  // |m| <= pi + width + slack < 11
  RealInterval m2 = (m * m).rounded(W);
  RealInterval sum = RealInterval::exact(1, W);
  RealInterval term = RealInterval::exact(1, W);
  BigRational M2(121);  // (sup|m|)^2 <= 121
  BigRational lagrange = M2;  // M^(2K+2)/(2K+2)! after K steps
  BigRational eps(BigInt(1), BigInt(1) << W);
  long k = 0;
  while (lagrange > eps) {
    ++k;
    term = (term * m2).rounded(W);
    term = mul_rational(term, BigRational(1, BigInt(2 * k) * (2 * k - 1))).rounded(W);
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    lagrange = lagrange * M2 / (BigInt(2 * k + 1) * BigInt(2 * k + 2));
    if (k > 2 * W + 64) break;
  }
  Dyadic rem = Dyadic::from_rational(lagrange, 32, Round::Up);
  RealInterval res = sum.add_error(rem).rounded(prec);
  // clamp to [-1, 1]
  Dyadic lo = std::max(res.lo(), minus_one.lo());
  Dyadic hi = std::min(res.hi(), one.hi());
  if (hi < lo) return box;
  return RealInterval(lo, hi, prec);
}

RealInterval eval_pow(const BigRational& base, const BigRational& exponent, long prec) {
  if (base <= 0) throw std::domain_error("eval_pow: nonpositive base");
  if (den(exponent) == 1) {
    BigInt e = num(exponent);
    if (boost::multiprecision::abs(e) < 1024)
      return RealInterval::exact(pow_rational(base, static_cast<long>(e)), prec);
  }
  long W = prec + kGuard;
  RealInterval lg = eval_log(base, W);
  return eval_exp(mul_rational(lg, exponent), prec);
}

RealInterval term_modulus_from_parts(const RealInterval& q_squared,
                                     const RealInterval& log_q_abs, const RealInterval& t,
                                     long prec) {
  long W = prec + kGuard;
  RealInterval theta = (t * log_q_abs).scale2(1);
  RealInterval c = eval_cos(theta, W);
  RealInterval one = RealInterval::exact(1, W);
  RealInterval q4 = (q_squared * q_squared).rounded(W);
  RealInterval inner = one - q_squared.scale2(1) * c + q4;
  // inner = (1-q^2)^2 + 2q^2(1-cos theta), so clamp to the analytic range
  RealInterval one_minus = one - q_squared;
  RealInterval one_plus = one + q_squared;
  RealInterval lo_bound = one_minus * one_minus;
  RealInterval hi_bound = one_plus * one_plus;
  Dyadic lo = std::max(inner.lo(), lo_bound.lo());
  Dyadic hi = std::min(inner.hi(), hi_bound.hi());
  if (hi < lo) throw std::logic_error("term_modulus: inconsistent clamp");
  RealInterval denom = interval_sqrt(RealInterval(lo, hi, W), W);
  RealInterval term = one - one_minus / denom;
  return term.rounded(prec);
}

RealInterval term_modulus(const BigRational& q, const RealInterval& t, long prec) {
  if (q == 0 || q <= -1 || q >= 1)
    throw std::domain_error("term_modulus: q must lie in (-1,1) \\ {0}");
  long W = prec + kGuard;
  BigRational q2 = q * q;
  BigRational qa = q < 0 ? -q : q;
  RealInterval lq = eval_log(qa, W);
  return term_modulus_from_parts(RealInterval::exact(q2, W), lq, t, prec);
}

std::pair<BigRational, BigRational> ts_partial(const BigRational& s, unsigned terms) {
  if (s <= 0 || s >= 1) throw std::domain_error("ts: s must lie in (0,1)");
  if (terms < 1) throw std::invalid_argument("ts: at least one term");
  BigRational one_minus_s = 1 - s;
  BigRational head = 0;
  BigInt fact = 1;
  for (unsigned p = 1; p <= terms; ++p) {
    fact *= p;
    head += BigRational(floor_pow_rational(p, one_minus_s), fact);
  }
  // sum_{p>P} floor(p^(1-s))/p! <= sum_{p>P} p/p! = sum_{j>=P} 1/j! <= (P+1)/(P * P!)
  BigRational tail(BigInt(terms) + 1, BigInt(terms) * fact);
  return {head, tail};
}

RealInterval ts_enclosure(const BigRational& s, long prec) {
  BigRational eps(BigInt(1), BigInt(1) << (prec + 2));
  unsigned P = 4;
  auto partial = ts_partial(s, P);
  while (partial.second > eps && P < 2000) {
    P += 4;
    partial = ts_partial(s, P);
  }
  RealInterval h = RealInterval::exact(partial.first, prec + 16);
  Dyadic t = Dyadic::from_rational(partial.second, 32, Round::Up);
  return RealInterval(h.lo(), h.hi() + t, prec + 16).rounded(prec);
}

}  // namespace factorium

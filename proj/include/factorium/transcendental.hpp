#pragma once

#include "factorium/interval.hpp"

namespace factorium {

/// Enclosure of pi.
RealInterval eval_pi(long prec);

/// Enclosure of log 2.
RealInterval eval_log2(long prec);

/// e^x. Throws MagnitudeOverflow when |x| would push the result past the
/// representable exponent range (~2^40 in the exponent).
RealInterval eval_exp(const RealInterval& x, long prec);
RealInterval eval_exp(const BigRational& x, long prec);

/// Natural log; requires x > 0 (certified by the interval).
RealInterval eval_log(const RealInterval& x, long prec);
RealInterval eval_log(const BigRational& x, long prec);

/// cos x for arbitrary interval x (falls back to [-1,1] when x is too wide).
RealInterval eval_cos(const RealInterval& x, long prec);

/// b^e = exp(e * log b) for b > 0.
RealInterval eval_pow(const BigRational& base, const BigRational& exponent, long prec);

/// 1 - (1 - q^2)/|1 - |q|^(2+2it)| evaluated as
/// 1 - (1-q^2)/sqrt(1 - 2 q^2 cos(2 t log|q|) + q^4), for 0 < |q| < 1.
/// The t argument is an enclosure of the time parameter.
RealInterval term_modulus(const BigRational& q, const RealInterval& t, long prec);

/// Same formula with q^2 supplied directly as an enclosure together with
/// log|q| (used for blocks whose q is exp of a symbolic value).
RealInterval term_modulus_from_parts(const RealInterval& q_squared, const RealInterval& log_q_abs,
                                     const RealInterval& t, long prec);

/// Enclosure of t_s = sum_{p>=1} floor(p^(1-s))/p! for s in (0,1) at precision
/// `prec`: exact rational head plus a rigorous factorial tail bound.
RealInterval ts_enclosure(const BigRational& s, long prec);

/// The same with an explicit truncation point; returns (head, tail_bound).
std::pair<BigRational, BigRational> ts_partial(const BigRational& s, unsigned terms);

}  // namespace factorium

#pragma once

#include <vector>

#include "qsu2/half_int.hpp"
#include "qsu2/qparam.hpp"

namespace qsu2 {

// [x]_q = (q^x - q^{-x})/(q - q^{-1}).  Real in both regimes:
// sinh(x tau)/sinh(tau) for q = e^tau, sin(x tau)/sin(tau) for q = e^{i tau}.
// Returned as Complex so every q-arithmetic routine has a single value type.
Complex q_bracket(double x, const QParam& q);
Complex q_bracket(HalfInt x, const QParam& q);

// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.  Requires n >= 0.
Complex q_factorial(int n, const QParam& q);

// 1/[n]_q!, extended by the convention ([n]_q!)^{-1} = 0 for n < 0.
Complex inverse_q_factorial(int n, const QParam& q);

// Gaussian binomial [n]_q! / ([p]_q! [n-p]_q!); requires 0 <= p <= n.
Complex q_binomial(int n, int p, const QParam& q);

// Integer power of a complex number (binary exponentiation; negative
// exponents invert).
Complex cpow_int(Complex base, long long n);

// i^n for any integer n.
Complex i_pow(long long n);

// Result of an alternating sum together with the magnitude of its largest
// term, which is the natural scale for judging cancellation to zero.
struct ScaledSum {
    Complex value;
    double term_scale;
};

// sum_{p=0}^{2J+1} (-1)^p C_q(2J+1, p) q^{2Np}.  Vanishes identically for
// |N| <= J; used as a self-test primitive.
Complex alternating_qbinomial_sum(HalfInt J, HalfInt N, const QParam& q);
ScaledSum alternating_qbinomial_sum_scaled(HalfInt J, HalfInt N, const QParam& q);

// The weighted companion: sum_{p=0}^{2J+1} (-1)^{p-1} p C_q(2J+1,p) q^{2N(p-1)}
// equals (-1)^{J+N} (q-q^{-1})^{2J} [J-N]_q! [J+N]_q! q^{N(2J-1)}.
ScaledSum weighted_qbinomial_sum_scaled(HalfInt J, HalfInt N, const QParam& q);
Complex weighted_qbinomial_closed_form(HalfInt J, HalfInt N, const QParam& q);

} // namespace qsu2

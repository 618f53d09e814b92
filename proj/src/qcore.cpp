#include "qsu2/qcore.hpp"

#include <cmath>
#include <stdexcept>

namespace qsu2 {

Complex q_bracket(double x, const QParam& q) {
    if (q.regime() == QRegime::PositiveReal)
        return Complex(std::sinh(x * q.tau()) / std::sinh(q.tau()), 0.0);
    return Complex(std::sin(x * q.tau()) / std::sin(q.tau()), 0.0);
}

Complex q_bracket(HalfInt x, const QParam& q) { return q_bracket(x.value(), q); }

Complex q_factorial(int n, const QParam& q) {
    if (n < 0) throw std::domain_error("q_factorial: n must be >= 0");
    Complex acc(1.0, 0.0);
    for (int k = 2; k <= n; ++k) acc *= q_bracket(static_cast<double>(k), q);
    return acc;
}

Complex inverse_q_factorial(int n, const QParam& q) {
    if (n < 0) return Complex(0.0, 0.0);
    return 1.0 / q_factorial(n, q);
}

Complex q_binomial(int n, int p, const QParam& q) {
    if (p < 0 || p > n)
        throw std::domain_error("q_binomial: need 0 <= p <= n, got n=" + std::to_string(n) +
                                ", p=" + std::to_string(p));
    // Multiply ratio-wise to keep intermediate magnitudes tame.
    Complex acc(1.0, 0.0);
    for (int k = 1; k <= p; ++k)
        acc *= q_bracket(static_cast<double>(n - p + k), q) / q_bracket(static_cast<double>(k), q);
    return acc;
}

Complex cpow_int(Complex base, long long n) {
    if (n < 0) return 1.0 / cpow_int(base, -n);
    Complex acc(1.0, 0.0);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Complex i_pow(long long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return Complex(1.0, 0.0);
        case 1: return Complex(0.0, 1.0);
        case 2: return Complex(-1.0, 0.0);
        default: return Complex(0.0, -1.0);
    }
}

namespace {

void require_spin_pair(HalfInt J, HalfInt N) {
    if (!same_parity(J, N) || abs(N) > J || J.twice() < 0)
        throw std::domain_error("q-binomial sum: need |N| <= J with shared parity");
}

} // namespace

ScaledSum alternating_qbinomial_sum_scaled(HalfInt J, HalfInt N, const QParam& q) {
    require_spin_pair(J, N);
    const int n = J.twice() + 1; // 2J + 1
    Complex sum(0.0, 0.0);
    double scale = 0.0;
    for (int p = 0; p <= n; ++p) {
        // q^{2Np} with 2N = N.twice(), an exact integer exponent.
        Complex term = q_binomial(n, p, q) * q.pow(static_cast<double>(N.twice()) * p);
        if (p % 2 != 0) term = -term;
        sum += term;
        scale = std::max(scale, std::abs(term));
    }
    return {sum, scale};
}

Complex alternating_qbinomial_sum(HalfInt J, HalfInt N, const QParam& q) {
    return alternating_qbinomial_sum_scaled(J, N, q).value;
}

ScaledSum weighted_qbinomial_sum_scaled(HalfInt J, HalfInt N, const QParam& q) {
    require_spin_pair(J, N);
    const int n = J.twice() + 1;
    Complex sum(0.0, 0.0);
    double scale = 0.0;
    for (int p = 1; p <= n; ++p) {
        Complex term = static_cast<double>(p) * q_binomial(n, p, q) *
                       q.pow(static_cast<double>(N.twice()) * (p - 1));
        if (p % 2 == 0) term = -term; // (-1)^{p-1}
        sum += term;
        scale = std::max(scale, std::abs(term));
    }
    return {sum, scale};
}

Complex weighted_qbinomial_closed_form(HalfInt J, HalfInt N, const QParam& q) {
    require_spin_pair(J, N);
    const int j_plus_n = (J + N).as_int();
    const int j_minus_n = (J - N).as_int();
    // N(2J-1): exact integer because N.twice() * (2J-1) is always even.
    const long long n_2jm1 = static_cast<long long>(N.twice()) * (J.twice() - 1) / 2;
    double sign = (j_plus_n % 2 == 0) ? 1.0 : -1.0;
    return sign * cpow_int(q.q_minus_qinv(), J.twice()) * q_factorial(j_minus_n, q) *
           q_factorial(j_plus_n, q) * q.pow(static_cast<double>(n_2jm1));
}

} // namespace qsu2

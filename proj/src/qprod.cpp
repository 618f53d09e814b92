#include "qsu2/qprod.hpp"

#include <cmath>

namespace qsu2 {

namespace detail {

Complex q_integer_J(HalfInt J, Complex eta, const QParam& q) {
    if (!J.is_integer() || J.twice() < 0)
        throw std::domain_error("q_integer_J: J must be a nonnegative integer, got " +
                                J.to_string());
    const int j = J.as_int();
    Complex acc(1.0, 0.0);
    for (int k = 0; k < j; ++k) {
        Complex factor = 1.0 + eta * q.pow(static_cast<double>(-2 * j + 2 * k));
        if (std::abs(factor) < 1e-12 * (1.0 + std::abs(eta)))
            throw std::domain_error("q_integer_J: product factor at pole (k=" +
                                    std::to_string(k) + ")");
        acc /= factor;
    }
    return acc;
}

} // namespace detail

Complex q_integer_J(HalfInt J, double eta, const QParam& q) {
    if (eta < 0.0) throw std::domain_error("q_integer_J: eta must be >= 0");
    return detail::q_integer_J(J, Complex(eta, 0.0), q);
}

double q_half_integer_real(HalfInt J, double eta, const QParam& q,
                           const TruncationPolicy& policy) {
    policy.validate();
    if (q.regime() != QRegime::PositiveReal)
        throw std::domain_error("q_half_integer_real: q must be real positive");
    if (eta < 0.0) throw std::domain_error("q_half_integer_real: eta must be >= 0");
    if (J.twice() < 0) throw std::domain_error("q_half_integer_real: J must be >= 0");
    if (eta == 0.0) return 1.0;

    const double qv = q.real_q();
    const double two_j = static_cast<double>(J.twice());
    // Both branches have log-factors decaying geometrically with ratio r.
    const bool q_below_one = qv < 1.0;
    const double r = q_below_one ? qv * qv : 1.0 / (qv * qv);
    const double stop = policy.rel_tol / 16.0;

    double log_sum = 0.0;
    int quiet = 0;
    double last = 0.0;
    for (int k = 0; k < policy.max_terms; ++k) {
        double term;
        if (q_below_one) {
            const double a = std::pow(qv, 2.0 * k) * eta;
            const double b = std::pow(qv, -two_j + 2.0 * k) * eta;
            term = std::log1p(a) - std::log1p(b);
        } else {
            const double a = std::pow(qv, -two_j - 2.0 * k - 2.0) * eta;
            const double b = std::pow(qv, -2.0 * k - 2.0) * eta;
            term = std::log1p(a) - std::log1p(b);
        }
        log_sum += term;
        last = std::abs(term);
        quiet = (last < stop) ? quiet + 1 : 0;
        if (quiet >= 3) return std::exp(log_sum);
    }
    const double tail_bound = last * r / (1.0 - r);
    throw TruncationError("q_half_integer_real: product did not converge within " +
                              std::to_string(policy.max_terms) + " factors",
                          Complex(std::exp(log_sum), 0.0), tail_bound);
}

TruncationPolicy policy_for_tau(double tau, double rel_tol) {
    TruncationPolicy policy;
    policy.rel_tol = rel_tol;
    const double needed = 45.0 / (2.0 * std::abs(tau)) + 64.0;
    policy.max_terms = needed > 512.0 ? static_cast<int>(needed) : 512;
    return policy;
}

Complex one_phi_zero(Complex a, Complex base, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    if (std::abs(base) >= 1.0)
        throw std::domain_error("one_phi_zero: |base| must be < 1");
    if (z == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    if (std::abs(z) >= 1.0)
        throw TruncationError("one_phi_zero: series diverges for |z| >= 1", Complex(1.0, 0.0),
                              std::abs(z));

    Complex sum(1.0, 0.0);
    Complex term(1.0, 0.0);
    Complex base_k(1.0, 0.0); // base^k
    int quiet = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        term *= z * (1.0 - a * base_k) / (1.0 - base_k * base);
        base_k *= base;
        sum += term;
        quiet = (std::abs(term) <= policy.rel_tol * std::abs(sum)) ? quiet + 1 : 0;
        if (quiet >= 3) return sum;
    }
    // Geometric tail bound from the limiting term ratio |z|.
    const double ratio = std::abs(z);
    const double bound = std::abs(term) * ratio / (1.0 - ratio);
    throw TruncationError("one_phi_zero: series did not converge within " +
                              std::to_string(policy.max_terms) + " terms",
                          sum, bound);
}

} // namespace qsu2

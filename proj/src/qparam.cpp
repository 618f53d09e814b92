#include "qsu2/qparam.hpp"

#include <cmath>
#include <string>

namespace qsu2 {

namespace {
constexpr double kPi = 3.14159265358979323846;
// Rejection threshold for |sin(k tau)|: below this a q-factorial is
// numerically degenerate.
constexpr double kGenericityEps = 1e-9;
} // namespace

QParam QParam::positive_real(double tau) {
    if (!std::isfinite(tau) || tau == 0.0)
        throw std::domain_error("QParam: PositiveReal regime needs finite nonzero tau (q != 1)");
    return QParam(QRegime::PositiveReal, tau, 0);
}

QParam QParam::from_real_q(double q) {
    if (!(q > 0.0) || q == 1.0)
        throw std::domain_error("QParam: real q must be positive and different from 1");
    return positive_real(std::log(q));
}

QParam QParam::unit_circle(double tau, int guard_order) {
    if (!std::isfinite(tau) || std::abs(tau) <= 0.0 || std::abs(tau) >= kPi)
        throw std::domain_error("QParam: UnitCircle regime needs 0 < |tau| < pi");
    if (guard_order < 1)
        throw std::domain_error("QParam: guard order must be >= 1");
    // Genericity: [k]_q = sin(k tau)/sin(tau) must stay away from zero for
    // every k up to the guard order.
    for (int k = 1; k <= guard_order; ++k) {
        if (std::abs(std::sin(k * tau)) < kGenericityEps)
            throw std::domain_error("QParam: tau = " + std::to_string(tau) +
                                    " is too close to a root of unity (order " +
                                    std::to_string(k) + ")");
    }
    return QParam(QRegime::UnitCircle, tau, guard_order);
}

Complex QParam::q() const {
    if (regime_ == QRegime::PositiveReal) return Complex(std::exp(tau_), 0.0);
    return Complex(std::cos(tau_), std::sin(tau_));
}

double QParam::real_q() const {
    if (regime_ != QRegime::PositiveReal)
        throw std::domain_error("QParam: real_q() requires the PositiveReal regime");
    return std::exp(tau_);
}

QParam QParam::inverse() const { return QParam(regime_, -tau_, guard_order_); }

Complex QParam::pow(double x) const {
    if (regime_ == QRegime::PositiveReal) return Complex(std::exp(x * tau_), 0.0);
    return Complex(std::cos(x * tau_), std::sin(x * tau_));
}

Complex QParam::q_minus_qinv() const {
    if (regime_ == QRegime::PositiveReal) return Complex(2.0 * std::sinh(tau_), 0.0);
    return Complex(0.0, 2.0 * std::sin(tau_));
}

Complex QParam::log_q() const {
    if (regime_ == QRegime::PositiveReal) return Complex(tau_, 0.0);
    return Complex(0.0, tau_);
}

int guard_order_for(HalfInt j_max) {
    int order = 2 * (j_max.twice() + 2);
    return order < QParam::kDefaultGuardOrder ? QParam::kDefaultGuardOrder : order;
}

} // namespace qsu2

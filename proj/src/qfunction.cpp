#include "qsu2/qfunction.hpp"

#include <cmath>

namespace qsu2 {

QFunction::QFunction(HalfInt J, const QParam& q, TruncationPolicy policy, double lq_tol)
    : j_(J), q_(q), policy_(policy) {
    if (J.twice() < 0) throw std::domain_error("QFunction: J must be >= 0");
    policy_.validate();
    if (j_.is_half_odd() && q_.regime() == QRegime::UnitCircle)
        lq_ = std::make_shared<const LqEvaluator>(q_, lq_tol);
}

Complex QFunction::at_ray(RayPoint eta) const {
    if (eta.r == 0.0) return Complex(1.0, 0.0);
    if (j_.is_integer()) return detail::q_integer_J(j_, eta.to_complex(), q_);
    if (q_.regime() == QRegime::UnitCircle) return lq_->q_half_integer(j_, eta);
    // Half-odd J with real q: the products are defined on the positive
    // half-line only.
    if (std::abs(std::sin(eta.psi)) * eta.r > 1e-12 * (1.0 + eta.r) ||
        std::cos(eta.psi) < 0.0)
        throw std::domain_error("QFunction: half-odd J with real q needs eta on [0, inf)");
    return Complex(q_half_integer_real(j_, eta.r * std::cos(eta.psi), q_, policy_), 0.0);
}

Complex QFunction::operator()(Complex eta) const {
    if (eta == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    return at_ray(RayPoint::from_complex(eta));
}

Complex QFunction::operator()(double eta) const { return (*this)(Complex(eta, 0.0)); }

} // namespace qsu2

#include "qsu2/contour.hpp"

#include <cmath>

#include "qsu2/qcore.hpp"

namespace qsu2 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPiSqOver12 = kPi * kPi / 12.0;
constexpr Complex kTwoPiI(0.0, 2.0 * kPi);
} // namespace

Complex RayPoint::to_complex() const { return std::polar(r, psi); }

RayPoint RayPoint::from_complex(Complex eta) { return RayPoint{std::abs(eta), std::arg(eta)}; }

LqEvaluator::LqEvaluator(const QParam& q, double quad_tol, double sector_bound)
    : tau_(q.tau()), quad_tol_(quad_tol), sector_bound_(sector_bound) {
    if (q.regime() != QRegime::UnitCircle)
        throw std::domain_error("LqEvaluator: q must lie on the unit circle");
    if (!(quad_tol > 0.0)) throw std::domain_error("LqEvaluator: quad_tol must be > 0");
    if (!(sector_bound > 0.0) || sector_bound >= kPi)
        throw std::domain_error("LqEvaluator: sector bound must be in (0, pi)");
    quad_.abs_tol = quad_tol;
    quad_.rel_tol = quad_tol;
    quad_.max_intervals = 8000;
}

// Direct evaluation of the half-line integral for |arg eta| within the
// sector.  Split at t = 1 and desingularise each piece:
//   t in (0,1):  s = t^c      ->  (1/c) int_0^1 Ln(1 + eta s) / (s (1 + s^{1/c})) ds
//   t in (1,oo): t = 1/v, and Ln(1 + eta v^{-c}) = -c ln v + Ln(eta + v^c)
//                ->  c pi^2/12 + int_0^1 Ln(eta + v^c) / (1 + v) dv
// with c = |tau|/pi in (0,1).  For the mirror regime tau < 0 the whole
// integral flips sign.
Complex LqEvaluator::integral_in_sector(Complex eta) const {
    if (eta == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    const double c = std::abs(tau_) / kPi;
    const double inv_c = 1.0 / c;

    const Integrand near = [&](double s) {
        return std::log(1.0 + eta * s) / (c * s * (1.0 + std::pow(s, inv_c)));
    };
    const Integrand far = [&](double v) {
        return std::log(eta + std::pow(v, c)) / (1.0 + v);
    };

    QuadResult a = integrate_interval(near, 0.0, 1.0, quad_);
    QuadResult b = integrate_interval(far, 0.0, 1.0, quad_);
    if (!a.converged || !b.converged)
        throw std::runtime_error("LqEvaluator: quadrature did not reach tolerance " +
                                 std::to_string(quad_tol_));

    Complex total = a.value + b.value + c * kPiSqOver12;
    if (tau_ < 0.0) total = -total;
    return total / kTwoPiI;
}

std::pair<RayPoint, Complex> LqEvaluator::reduce_to_sector(RayPoint eta) const {
    if (!(eta.r > 0.0))
        throw std::domain_error("reduce_to_sector: eta must be nonzero");
    const double step = 2.0 * std::abs(tau_);
    const double sgn = tau_ > 0.0 ? 1.0 : -1.0;
    Complex correction(0.0, 0.0);

    double psi = eta.psi;
    long guard = static_cast<long>(std::abs(psi) / step) + 4;
    while (std::abs(psi) > sector_bound_ && guard-- > 0) {
        const bool from_above = psi > 0.0;
        const double mid = from_above ? psi - 0.5 * step : psi + 0.5 * step;
        Complex one_plus = 1.0 + std::polar(eta.r, mid);
        if (std::abs(one_plus) < 1e-12 * (1.0 + eta.r))
            throw std::domain_error("reduce_to_sector: midpoint falls on the logarithm cut");
        correction += (from_above ? sgn : -sgn) * std::log(one_plus);
        psi += from_above ? -step : step;
    }
    if (std::abs(psi) > sector_bound_)
        throw std::domain_error("reduce_to_sector: argument cannot be brought inside the sector");
    return {RayPoint{eta.r, psi}, correction};
}

std::pair<Complex, Complex> LqEvaluator::reduce_to_sector(Complex eta) const {
    auto [point, corr] = reduce_to_sector(RayPoint::from_complex(eta));
    return {point.to_complex(), corr};
}

Complex LqEvaluator::l_q(RayPoint eta) const {
    if (eta.r == 0.0) return Complex(0.0, 0.0);
    auto [point, corr] = reduce_to_sector(eta);
    return integral_in_sector(point.to_complex()) + corr;
}

Complex LqEvaluator::l_q(Complex eta) const {
    if (eta == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    return l_q(RayPoint::from_complex(eta));
}

Complex LqEvaluator::q_half_integer(HalfInt J, RayPoint eta) const {
    if (!J.is_half_odd() || J.twice() < 0)
        throw std::domain_error("q_half_integer: J must be a positive half-odd integer");
    if (eta.r == 0.0) return Complex(1.0, 0.0);
    const double shift_far = (J.twice() + 1) * tau_;  // (2J+1) tau
    Complex k = l_q(RayPoint{eta.r, eta.psi - shift_far}) - l_q(RayPoint{eta.r, eta.psi - tau_});
    return std::exp(k);
}

Complex q_half_integer_circle(HalfInt J, double eta, const QParam& q, const LqEvaluator& ev) {
    if (eta < 0.0) throw std::domain_error("q_half_integer_circle: eta must be > 0");
    if (q.regime() != QRegime::UnitCircle)
        throw std::domain_error("q_half_integer_circle: q must lie on the unit circle");
    return ev.q_half_integer(J, RayPoint{eta, 0.0});
}

Complex f_product(HalfInt J, Complex eta, const QParam& q) {
    if (J.twice() < 0) throw std::domain_error("f_product: J must be >= 0");
    Complex acc(1.0, 0.0);
    for (int p = 0; p <= J.twice() + 1; ++p) {
        Complex factor = 1.0 + eta * q.pow(static_cast<double>(J.twice() - 2 * p));
        if (std::abs(factor) < 1e-12 * (1.0 + std::abs(eta)))
            throw std::domain_error("f_product: factor at pole (p=" + std::to_string(p) + ")");
        acc /= factor;
    }
    return acc;
}

} // namespace qsu2

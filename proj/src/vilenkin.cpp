#include "qsu2/vilenkin.hpp"

#include <cmath>

namespace qsu2 {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

double factorial(int n) {
    double acc = 1.0;
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}
} // namespace

CoordinatePoint CoordinatePoint::plane(Complex z) {
    return CoordinatePoint(std::abs(z), std::arg(z));
}

CoordinatePoint CoordinatePoint::spherical(double theta, double phi) {
    if (!(theta >= 0.0) || !(theta <= 3.14159265358979323846 + 1e-15))
        throw std::domain_error("CoordinatePoint: theta must lie in [0, pi]");
    return CoordinatePoint(1.0 / std::tan(0.5 * theta), phi);
}

CoordinatePoint CoordinatePoint::from_xi(double xi, double phi) {
    if (!(xi >= -1.0) || !(xi < 1.0))
        throw std::domain_error("CoordinatePoint: xi must lie in [-1, 1)");
    return CoordinatePoint(std::sqrt((1.0 + xi) / (1.0 - xi)), phi);
}

Complex CoordinatePoint::z() const { return std::polar(rho_, phi_); }

double CoordinatePoint::theta() const { return 2.0 * std::atan2(1.0, rho_); }

double CoordinatePoint::xi() const {
    double e = eta();
    return (e - 1.0) / (e + 1.0);
}

Complex r_polynomial(const SpinTriple& spin, const QParam& q, Complex eta) {
    const int jm = spin.j_minus_m();
    const int jn = spin.j_minus_n();
    const int mn = spin.m_plus_n();

    const int k_lo = std::max(0, -mn);
    const int k_hi = std::min(jm, jn);
    if (k_hi < k_lo) return Complex(0.0, 0.0);

    const Complex prefactor = q_factorial(jn, q) * q_factorial(jm, q);
    Complex sum(0.0, 0.0);
    Complex eta_pow(1.0, 0.0);
    for (int k = 0; k <= k_hi; ++k) {
        if (k >= k_lo) {
            Complex denom = q_factorial(k, q) * q_factorial(jm - k, q) *
                            q_factorial(jn - k, q) * q_factorial(mn + k, q);
            sum += (k % 2 == 0 ? 1.0 : -1.0) * eta_pow / denom;
        }
        eta_pow *= eta;
    }
    return prefactor * sum;
}

Complex c_constant(HalfInt J, HalfInt N, const QParam& q) {
    const int jn = (J + N).as_int();
    const int jmn = (J - N).as_int();
    Complex ratio = q_factorial(jn, q) * q_factorial(J.twice() + 1, q) / q_factorial(jmn, q);
    return std::sqrt(ratio) / std::sqrt(kTwoPi);
}

Complex normalization(const SpinTriple& spin, const QParam& q) {
    Complex ratio = q_factorial(spin.j_plus_m(), q) /
                    (q_factorial(spin.j_minus_m(), q) * q_factorial(spin.two_j(), q));
    return c_constant(spin.J, spin.N, q) * std::sqrt(ratio);
}

VilenkinFunction::VilenkinFunction(SpinTriple spin, QParam q, TruncationPolicy policy,
                                   double lq_tol)
    : spin_(spin), q_(q), Q_(spin.J, q, policy, lq_tol) {
    // q^{-NM/2}; the exponent -tN*tM/8 is exact in binary.
    const Complex q_nm = q_.pow(-static_cast<double>(spin_.N.twice()) * spin_.M.twice() / 8.0);
    plane_prefactor_ = normalization(spin_, q_) * q_nm;

    const long long two_j_minus_mn = spin_.two_j() - spin_.m_plus_n();
    Complex ratio = q_factorial(spin_.j_plus_m(), q_) * q_factorial(spin_.j_plus_n(), q_) /
                    (q_factorial(spin_.j_minus_m(), q_) * q_factorial(spin_.j_minus_n(), q_));
    vilenkin_prefactor_ = i_pow(two_j_minus_mn) * std::sqrt(ratio);

    Complex sph_ratio = q_factorial(spin_.j_minus_n(), q_) /
                        (q_factorial(spin_.j_plus_n(), q_) * q_factorial(spin_.two_j(), q_));
    spherical_prefactor_ =
        c_constant(spin_.J, spin_.N, q_) * std::sqrt(sph_ratio) * i_pow(-two_j_minus_mn) * q_nm;
}

Complex VilenkinFunction::psi_plane(Complex z) const {
    const Complex zbar = std::conj(z);
    const Complex eta = z * zbar;
    const int mn = spin_.m_plus_n();
    if (z == Complex(0.0, 0.0)) {
        if (mn > 0) return Complex(0.0, 0.0);
        if (mn < 0) throw std::domain_error("psi_plane: singular at z = 0 for M+N < 0");
        return plane_prefactor_ * Q_(eta) * r_polynomial(spin_, q_, eta);
    }
    return plane_prefactor_ * Q_(eta) * r_polynomial(spin_, q_, eta) * cpow_int(zbar, mn);
}

Complex VilenkinFunction::p_vilenkin_c(Complex xi) const {
    const Complex eta = (1.0 + xi) / (1.0 - xi);
    const int mn = spin_.m_plus_n();
    if (eta == Complex(0.0, 0.0)) {
        if (mn != 0) return Complex(0.0, 0.0); // limit value at the south pole
        return vilenkin_prefactor_ * r_polynomial(spin_, q_, eta);
    }
    return vilenkin_prefactor_ * std::pow(eta, 0.5 * mn) * Q_(eta) *
           r_polynomial(spin_, q_, eta);
}

Complex VilenkinFunction::p_vilenkin(double xi) const {
    if (!(xi >= -1.0) || !(xi < 1.0))
        throw std::domain_error("p_vilenkin: xi must lie in [-1, 1); the eta -> infinity "
                                "endpoint is a limit point");
    return p_vilenkin_c(Complex(xi, 0.0));
}

Complex VilenkinFunction::psi_spherical(double theta, double phi) const {
    const double xi = std::cos(theta);
    if (xi >= 1.0) throw std::domain_error("psi_spherical: theta = 0 is a limit point");
    return spherical_prefactor_ * p_vilenkin_c(Complex(xi, 0.0)) *
           std::polar(1.0, -spin_.m_plus_n() * phi);
}

std::function<Complex(Complex)> VilenkinFunction::radial_profile() const {
    const SpinTriple spin = spin_;
    const QParam q = q_;
    const QFunction Q = Q_;
    const Complex pref = plane_prefactor_;
    const int mn = spin_.m_plus_n();
    return [spin, q, Q, pref, mn](Complex rho) {
        if (rho == Complex(0.0, 0.0)) {
            if (mn > 0) return Complex(0.0, 0.0);
            if (mn < 0) throw std::domain_error("radial profile singular at rho = 0 for M+N < 0");
            return pref * Q(Complex(0.0, 0.0)) * r_polynomial(spin, q, Complex(0.0, 0.0));
        }
        const Complex eta = rho * rho;
        return pref * Q(eta) * r_polynomial(spin, q, eta) * cpow_int(rho, mn);
    };
}

double classical_r_polynomial(const SpinTriple& spin, double eta) {
    const int jm = spin.j_minus_m();
    const int jn = spin.j_minus_n();
    const int mn = spin.m_plus_n();
    const int k_lo = std::max(0, -mn);
    const int k_hi = std::min(jm, jn);
    if (k_hi < k_lo) return 0.0;

    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        double term = std::pow(-eta, k) /
                      (factorial(k) * factorial(jm - k) * factorial(jn - k) * factorial(mn + k));
        sum += term;
    }
    return factorial(jn) * factorial(jm) * sum;
}

Complex classical_vilenkin(const SpinTriple& spin, double xi) {
    if (!(xi >= -1.0) || !(xi < 1.0))
        throw std::domain_error("classical_vilenkin: xi must lie in [-1, 1)");
    const double eta = (1.0 + xi) / (1.0 - xi);
    const int mn = spin.m_plus_n();
    const double ratio = factorial(spin.j_plus_m()) * factorial(spin.j_plus_n()) /
                         (factorial(spin.j_minus_m()) * factorial(spin.j_minus_n()));
    const double q_j = std::pow(1.0 + eta, -spin.J.value());
    double eta_pow = (eta == 0.0) ? (mn == 0 ? 1.0 : 0.0) : std::pow(eta, 0.5 * mn);
    return i_pow(spin.two_j() - mn) * std::sqrt(ratio) * eta_pow * q_j *
           classical_r_polynomial(spin, eta);
}

Complex classical_psi_spherical(const SpinTriple& spin, double theta, double phi) {
    const double xi = std::cos(theta);
    const double c = std::sqrt(factorial(spin.j_plus_n()) * factorial(spin.two_j() + 1) /
                               factorial(spin.j_minus_n())) /
                     std::sqrt(kTwoPi);
    const double ratio = factorial(spin.j_minus_n()) /
                         (factorial(spin.j_plus_n()) * factorial(spin.two_j()));
    return c * std::sqrt(ratio) * i_pow(-(spin.two_j() - spin.m_plus_n())) *
           classical_vilenkin(spin, xi) * std::polar(1.0, -spin.m_plus_n() * phi);
}

std::function<Complex(Complex)> classical_radial_profile(const SpinTriple& spin) {
    const SpinTriple s = spin;
    const double norm = std::sqrt(factorial(s.j_plus_n()) * factorial(s.two_j() + 1) /
                                  factorial(s.j_minus_n()) / kTwoPi) *
                        std::sqrt(factorial(s.j_plus_m()) /
                                  (factorial(s.j_minus_m()) * factorial(s.two_j())));
    const int mn = s.m_plus_n();
    return [s, norm, mn](Complex rho) {
        const Complex eta = rho * rho;
        Complex q_j = std::pow(1.0 + eta, -s.J.value());
        SpinTriple local = s;
        // classical R at complex eta
        const int jm = local.j_minus_m();
        const int jn = local.j_minus_n();
        const int k_lo = std::max(0, -mn);
        const int k_hi = std::min(jm, jn);
        Complex sum(0.0, 0.0);
        for (int k = k_lo; k <= k_hi; ++k)
            sum += cpow_int(-eta, k) / (factorial(k) * factorial(jm - k) * factorial(jn - k) *
                                        factorial(mn + k));
        Complex r = factorial(jn) * factorial(jm) * sum;
        return norm * q_j * r * cpow_int(rho, mn);
    };
}

} // namespace qsu2

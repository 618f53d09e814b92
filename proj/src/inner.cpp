#include "qsu2/inner.hpp"

#include <cmath>

#include "qsu2/contour.hpp"

namespace qsu2 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double real_prefactor(const QParam& q) {
    // (q - q^{-1}) / (2 ln q) = sinh(tau)/tau or sin(tau)/tau; real in both
    // regimes.
    if (q.regime() == QRegime::PositiveReal) return std::sinh(q.tau()) / q.tau();
    return std::sin(q.tau()) / q.tau();
}
} // namespace

QPair vilenkin_pair(const SpinTriple& spin, const QParam& q, TruncationPolicy policy,
                    double lq_tol) {
    VilenkinFunction at_q(spin, q, policy, lq_tol);
    VilenkinFunction at_qi(spin, q.inverse(), policy, lq_tol);
    return {at_q.mode(), at_q.radial_profile(), at_qi.radial_profile()};
}

QPair pair_h_plus(const QPair& pair, HalfInt N, const QParam& q) {
    auto rq = apply_h_plus(AngularMode{pair.m, pair.at_q}, N, q);
    auto rqi = apply_h_plus(AngularMode{pair.m, pair.at_q_inv}, N, q.inverse());
    return {pair.m + 1, rq.mode.radial, rqi.mode.radial};
}

QPair pair_h_minus(const QPair& pair, HalfInt N, const QParam& q) {
    auto rq = apply_h_minus(AngularMode{pair.m, pair.at_q}, N, q);
    auto rqi = apply_h_minus(AngularMode{pair.m, pair.at_q_inv}, N, q.inverse());
    return {pair.m - 1, rq.mode.radial, rqi.mode.radial};
}

InnerProductReport scalar_product_real_q(const QPair& psi1, const QPair& psi2, const QParam& q,
                                         const QuadratureSpec& spec) {
    if (q.regime() != QRegime::PositiveReal)
        throw std::domain_error("scalar_product_real_q: q must be real positive");
    if (psi1.m != psi2.m) return {Complex(0.0, 0.0), 0.0, q.regime(), true};

    const double qr = q.real_q();
    const double q2 = qr * qr;
    const Integrand radial = [&](double rho) {
        const double eta = rho * rho;
        const Complex x(rho, 0.0);
        const double wm = 1.0 / ((1.0 + eta) * (1.0 + eta / q2));
        const double wp = 1.0 / ((1.0 + eta) * (1.0 + eta * q2));
        const Complex t1 =
            std::conj(psi1.at_q_inv(x)) * wm * (1.0 / qr) * psi2.at_q(Complex(rho / qr, 0.0));
        const Complex t2 =
            std::conj(psi1.at_q(x)) * wp * qr * psi2.at_q_inv(Complex(rho * qr, 0.0));
        return rho * (t1 + t2);
    };
    QuadResult r = integrate_halfline(radial, spec);
    const double pref = kTwoPi * real_prefactor(q);
    return {pref * r.value, std::abs(pref) * r.est_error, q.regime(), r.converged};
}

InnerProductReport scalar_product_circle_q(const QPair& psi1, const QPair& psi2, const QParam& q,
                                           const QuadratureSpec& spec) {
    if (q.regime() != QRegime::UnitCircle)
        throw std::domain_error("scalar_product_circle_q: q must lie on the unit circle");
    if (psi1.m != psi2.m) return {Complex(0.0, 0.0), 0.0, q.regime(), true};

    const Complex qc = q.q();
    const Complex qinv = std::conj(qc);
    const Complex q2 = qc * qc;
    const Complex q2inv = std::conj(q2);
    const Integrand radial = [&](double rho) {
        const double eta = rho * rho;
        const Complex x(rho, 0.0);
        const Complex wm = 1.0 / ((1.0 + eta) * (1.0 + eta * q2inv));
        const Complex wp = 1.0 / ((1.0 + eta) * (1.0 + eta * q2));
        const Complex t1 = std::conj(psi1.at_q(x)) * wm * qinv * psi2.at_q(qinv * x);
        const Complex t2 = std::conj(psi1.at_q_inv(x)) * wp * qc * psi2.at_q_inv(qc * x);
        return rho * (t1 + t2);
    };
    QuadResult r = integrate_halfline(radial, spec);
    const double pref = kTwoPi * real_prefactor(q);
    return {pref * r.value, std::abs(pref) * r.est_error, q.regime(), r.converged};
}

InnerProductReport scalar_product(const QPair& psi1, const QPair& psi2, const QParam& q,
                                  const QuadratureSpec& spec) {
    return q.regime() == QRegime::PositiveReal ? scalar_product_real_q(psi1, psi2, q, spec)
                                               : scalar_product_circle_q(psi1, psi2, q, spec);
}

InnerProductReport classical_scalar_product(int m1, const std::function<Complex(Complex)>& f1,
                                            int m2, const std::function<Complex(Complex)>& f2,
                                            const QuadratureSpec& spec) {
    if (m1 != m2) return {Complex(0.0, 0.0), 0.0, QRegime::PositiveReal, true};
    const Integrand radial = [&](double rho) {
        const double eta = rho * rho;
        const Complex x(rho, 0.0);
        return rho * std::conj(f1(x)) * f2(x) / ((1.0 + eta) * (1.0 + eta));
    };
    QuadResult r = integrate_halfline(radial, spec);
    return {2.0 * kTwoPi * r.value, 2.0 * kTwoPi * r.est_error, QRegime::PositiveReal,
            r.converged};
}

InnerProductReport vilenkin_ortho_integral(HalfInt J1, HalfInt J2, HalfInt M, HalfInt N,
                                           const QParam& q, const QuadratureSpec& spec,
                                           TruncationPolicy policy, double lq_tol) {
    VilenkinFunction p1_q(SpinTriple(J1, M, N), q, policy, lq_tol);
    VilenkinFunction p1_qi(SpinTriple(J1, M, N), q.inverse(), policy, lq_tol);
    VilenkinFunction p2_q(SpinTriple(J2, M, N), q, policy, lq_tol);
    VilenkinFunction p2_qi(SpinTriple(J2, M, N), q.inverse(), policy, lq_tol);

    const Complex qpq = q.pow(1.0) + q.pow(-1.0); // q + q^{-1}
    const Complex qmq = q.q_minus_qinv();
    const Complex q2inv = q.pow(-2.0);
    const Complex q2 = q.pow(2.0);
    const bool circle = q.regime() == QRegime::UnitCircle;

    const Integrand f = [&](double xi) {
        const Complex eta = Complex((1.0 + xi) / (1.0 - xi), 0.0);
        const Complex eta_p = q2inv * eta;
        const Complex eta_m = q2 * eta;
        const Complex xi_p = (eta_p - 1.0) / (eta_p + 1.0);
        const Complex xi_m = (eta_m - 1.0) / (eta_m + 1.0);
        const Complex w1 = 1.0 / (qpq - qmq * xi);
        const Complex w2 = 1.0 / (qpq + qmq * xi);
        Complex t1, t2;
        if (circle) {
            t1 = std::conj(p1_q.p_vilenkin(xi)) * w1 * p2_q.p_vilenkin_c(xi_p);
            t2 = std::conj(p1_qi.p_vilenkin(xi)) * w2 * p2_qi.p_vilenkin_c(xi_m);
        } else {
            t1 = std::conj(p1_qi.p_vilenkin(xi)) * w1 * p2_q.p_vilenkin_c(xi_p);
            t2 = std::conj(p1_q.p_vilenkin(xi)) * w2 * p2_qi.p_vilenkin_c(xi_m);
        }
        return t1 + t2;
    };

    QuadResult r = integrate_interval(f, -1.0, 1.0, spec);
    const double pref = 0.5 * real_prefactor(q); // (q - q^{-1}) / (4 ln q)
    return {pref * r.value, std::abs(pref) * r.est_error, q.regime(), r.converged};
}

Complex norm_integral_closed_form(HalfInt J, HalfInt N, const QParam& q) {
    const int j_plus_n = (J + N).as_int();
    const int j_minus_n = (J - N).as_int();
    return 2.0 * q.log_q() * q.pow(j_plus_n + 1.0) * q_factorial(j_plus_n, q) *
           q_factorial(j_minus_n, q) /
           (q.q_minus_qinv() * q_factorial(J.twice() + 1, q));
}

DualEval norm_integral_real(HalfInt J, HalfInt N, const QParam& q, const QuadratureSpec& spec,
                            TruncationPolicy policy) {
    if (q.regime() != QRegime::PositiveReal)
        throw std::domain_error("norm_integral_real: q must be real positive");
    const QFunction Qq(J, q, policy);
    const QFunction Qqi(J, q.inverse(), policy);
    const int j_plus_n = (J + N).as_int();
    const double q2inv = std::exp(-2.0 * q.tau());

    const Integrand f = [&](double eta) {
        return Qqi(eta) * std::pow(eta, j_plus_n) * Qq(q2inv * eta) /
               ((1.0 + eta) * (1.0 + q2inv * eta));
    };
    QuadResult r = integrate_halfline(f, spec);
    return {r.value, norm_integral_closed_form(J, N, q), r.est_error, r.converged};
}

DualEval norm_integral_circle(HalfInt J, HalfInt N, const QParam& q, const QuadratureSpec& spec) {
    if (q.regime() != QRegime::UnitCircle)
        throw std::domain_error("norm_integral_circle: q must lie on the unit circle");
    const int j_plus_n = (J + N).as_int();
    const Integrand f = [&](double eta) {
        return f_product(J, Complex(eta, 0.0), q) * std::pow(eta, j_plus_n);
    };
    QuadResult r = integrate_halfline(f, spec);
    return {r.value, norm_integral_closed_form(J, N, q), r.est_error, r.converged};
}

Complex norm_integral_partial_fraction(HalfInt J, HalfInt N, const QParam& q) {
    if (q.regime() != QRegime::UnitCircle)
        throw std::domain_error("norm_integral_partial_fraction: q must lie on the unit circle");
    const int two_j = J.twice();
    const int j_plus_n = (J + N).as_int();
    const double sign = (j_plus_n % 2 == 0) ? 1.0 : -1.0;
    const Complex pref =
        sign * q.pow(J.value() + 1.0) / cpow_int(q.q_minus_qinv(), two_j + 1);
    Complex sum(0.0, 0.0);
    for (int p = 0; p <= two_j + 1; ++p) {
        const Complex coef = q.pow(N.value() * (2.0 * p - two_j)) *
                             inverse_q_factorial(p, q) *
                             inverse_q_factorial(two_j - p + 1, q);
        const Complex log_pole = std::log(q.pow(static_cast<double>(2 * p - two_j)));
        sum += (p % 2 == 0 ? 1.0 : -1.0) * coef * log_pole;
    }
    return -pref * sum; // G(inf) - G(0) with G(inf) = 0
}

namespace {

// Infinite product prod_k (1 + q^{x+y+k} t)/(1 + q^k t) in log space.
double qbeta_kernel(double t, double x_plus_y, double q, const TruncationPolicy& policy) {
    double log_sum = 0.0;
    double qk = 1.0;
    const double qxy = std::pow(q, x_plus_y);
    const double stop = policy.rel_tol / 16.0;
    int quiet = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        const double term = std::log1p(qxy * qk * t) - std::log1p(qk * t);
        log_sum += term;
        quiet = (std::abs(term) < stop) ? quiet + 1 : 0;
        if (quiet >= 3) return std::exp(log_sum);
        qk *= q;
    }
    throw TruncationError("ramanujan_qbeta: kernel product did not converge",
                          Complex(std::exp(log_sum), 0.0), std::abs(qk * t));
}

} // namespace

DualEval ramanujan_qbeta(int m, int n, double q, const QuadratureSpec& spec,
                         TruncationPolicy policy) {
    if (m < 1 || n < 1) throw std::domain_error("ramanujan_qbeta: m, n must be >= 1");
    if (!(q > 0.0) || !(q < 1.0)) throw std::domain_error("ramanujan_qbeta: need 0 < q < 1");
    policy.validate();

    const Integrand f = [&](double t) {
        return Complex(std::pow(t, m - 1) * qbeta_kernel(t, m + n, q, policy), 0.0);
    };
    QuadResult r = integrate_halfline(f, spec);

    const QParam q_half = QParam::positive_real(0.5 * std::log(q)); // base q^{1/2}
    const double sqrt_q = std::sqrt(q);
    const Complex closed = std::log(q) * std::pow(q, -0.5 * m * (n + m - 1)) *
                           q_factorial(m - 1, q_half) * q_factorial(n - 1, q_half) /
                           ((sqrt_q - 1.0 / sqrt_q) * q_factorial(n + m - 1, q_half));
    return {r.value, closed, r.est_error, r.converged};
}

DualEval ramanujan_qbeta_generic(double x, double y, double q, const QuadratureSpec& spec,
                                 TruncationPolicy policy) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("ramanujan_qbeta_generic: x, y must be > 0");
    if (!(q > 0.0) || !(q < 1.0))
        throw std::domain_error("ramanujan_qbeta_generic: need 0 < q < 1");
    if (std::abs(x - std::round(x)) < 1e-9)
        throw std::domain_error("ramanujan_qbeta_generic: x must be away from the integers "
                                "(use ramanujan_qbeta there)");
    policy.validate();

    const Integrand f = [&](double t) {
        return Complex(std::pow(t, x - 1.0) * qbeta_kernel(t, x + y, q, policy), 0.0);
    };
    QuadResult r = integrate_halfline(f, spec);

    double prod = 1.0;
    int quiet = 0;
    const double stop = policy.rel_tol / 16.0;
    bool done = false;
    for (int k = 1; k <= policy.max_terms && !done; ++k) {
        const double factor = (1.0 - std::pow(q, k - x)) * (1.0 - std::pow(q, x + y + k - 1.0)) /
                              ((1.0 - std::pow(q, k)) * (1.0 - std::pow(q, y + k - 1.0)));
        prod *= factor;
        quiet = (std::abs(factor - 1.0) < stop) ? quiet + 1 : 0;
        done = quiet >= 3;
    }
    if (!done)
        throw TruncationError("ramanujan_qbeta_generic: closed-form product did not converge",
                              Complex(prod, 0.0), 0.0);
    const Complex closed = kPi / std::sin(kPi * x) * prod;
    return {r.value, closed, r.est_error, r.converged};
}

namespace {

// Smallest eigenvalue of an n x n Hermitian matrix via the real-symmetric
// embedding [[Re, -Im], [Im, Re]] and cyclic Jacobi sweeps.  Matrices here
// are tiny (spin towers), so simplicity beats sophistication.
double min_eigenvalue_hermitian(const std::vector<Complex>& h, int n) {
    const int d = 2 * n;
    std::vector<double> a(d * d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i * d + j] = h[i * n + j].real();
            a[i * d + (n + j)] = -h[i * n + j].imag();
            a[(n + i) * d + j] = h[i * n + j].imag();
            a[(n + i) * d + (n + j)] = h[i * n + j].real();
        }
    }
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < d; ++p)
            for (int r = p + 1; r < d; ++r) off += a[p * d + r] * a[p * d + r];
        if (off < 1e-28) break;
        for (int p = 0; p < d; ++p) {
            for (int r = p + 1; r < d; ++r) {
                const double apq = a[p * d + r];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = 0.5 * (a[r * d + r] - a[p * d + p]) / apq;
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < d; ++k) {
                    const double akp = a[k * d + p];
                    const double akq = a[k * d + r];
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + r] = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const double apk = a[p * d + k];
                    const double aqk = a[r * d + k];
                    a[p * d + k] = c * apk - s * aqk;
                    a[r * d + k] = s * apk + c * aqk;
                }
            }
        }
    }
    double min_ev = a[0];
    for (int i = 1; i < d; ++i) min_ev = std::min(min_ev, a[i * d + i]);
    return min_ev;
}

} // namespace

GramReport gram_matrix(HalfInt J_max, HalfInt M, HalfInt N, const QParam& q,
                       const QuadratureSpec& spec, TruncationPolicy policy, double lq_tol) {
    if (!same_parity(J_max, M) || !same_parity(J_max, N))
        throw std::domain_error("gram_matrix: J_max must share parity with M and N");
    HalfInt j_lo = abs(M) > abs(N) ? abs(M) : abs(N);
    if (j_lo > J_max) throw std::domain_error("gram_matrix: J_max < max(|M|, |N|)");

    GramReport report;
    for (HalfInt j = j_lo; j <= J_max; j = j + 1) report.js.push_back(j);
    const int n = static_cast<int>(report.js.size());
    report.size = n;
    report.entries.assign(n * n, Complex(0.0, 0.0));

    std::vector<QPair> basis;
    basis.reserve(n);
    for (HalfInt j : report.js)
        basis.push_back(vilenkin_pair(SpinTriple(j, M, N), q, policy, lq_tol));

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            InnerProductReport e = scalar_product(basis[i], basis[j], q, spec);
            report.entries[i * n + j] = e.value;
            report.max_est_error = std::max(report.max_est_error, e.est_error);
            if (i != j) {
                // fill by Hermiticity; the residual of that symmetry is
                // checked separately in the test suites
                report.entries[j * n + i] = std::conj(e.value);
                report.max_offdiag = std::max(report.max_offdiag, std::abs(e.value));
            } else {
                report.max_diag_dev = std::max(report.max_diag_dev, std::abs(e.value - 1.0));
            }
        }
    }

    std::vector<Complex> herm(report.entries);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            herm[i * n + j] = 0.5 * (report.entries[i * n + j] +
                                     std::conj(report.entries[j * n + i]));
    report.min_eigenvalue = min_eigenvalue_hermitian(herm, n);
    return report;
}

} // namespace qsu2

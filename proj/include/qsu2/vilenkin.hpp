#pragma once

#include <functional>

#include "qsu2/qfunction.hpp"

namespace qsu2 {

// One point of the sphere in any of the three charts used by the basis
// functions:
//   plane      z = rho e^{i phi},  eta = z zbar = rho^2
//   spherical  (theta, phi),       rho = cot(theta/2)
//   xi chart   xi = cos(theta),    eta = (1+xi)/(1-xi)
struct CoordinatePoint {
    static CoordinatePoint plane(Complex z);
    static CoordinatePoint spherical(double theta, double phi);
    static CoordinatePoint from_xi(double xi, double phi = 0.0);

    Complex z() const;
    double rho() const { return rho_; }
    double phi() const { return phi_; }
    double eta() const { return rho_ * rho_; }
    double theta() const;
    double xi() const;

private:
    CoordinatePoint(double rho, double phi) : rho_(rho), phi_(phi) {}
    double rho_;
    double phi_;
};

// R^J_{MN,q}(eta): the polynomial part of the basis functions,
//   [J-N]_q! [J-M]_q! sum_k (-eta)^k / ([k]_q! [J-M-k]_q! [J-N-k]_q! [M+N+k]_q!),
// the sum running over the k for which every factorial argument is >= 0.
Complex r_polynomial(const SpinTriple& spin, const QParam& q, Complex eta);

// C_{JN,q} = (2 pi)^{-1/2} ([J+N]_q! [2J+1]_q! / [J-N]_q!)^{1/2}  (gauge
// constant chosen = 1).
Complex c_constant(HalfInt J, HalfInt N, const QParam& q);

// N^J_{MN,q} = C_{JN,q} ([J+M]_q! / ([J-M]_q! [2J]_q!))^{1/2}.
Complex normalization(const SpinTriple& spin, const QParam& q);

// One basis function Psi^J_{MN,q} together with its Q evaluator.
class VilenkinFunction {
public:
    VilenkinFunction(SpinTriple spin, QParam q, TruncationPolicy policy = {},
                     double lq_tol = 1e-11);

    // Psi in the plane chart: N^J_{MNq} Q(eta) q^{-NM/2} R(eta) zbar^{M+N}.
    Complex psi_plane(Complex z) const;

    // Psi in spherical coordinates (same function, reparametrised).
    Complex psi_spherical(double theta, double phi) const;

    // The q-Vilenkin function P^J_{MN,q}(xi), xi strictly in [-1, 1).
    Complex p_vilenkin(double xi) const;

    // P at complex xi; used by the flowed arguments of the orthogonality
    // integrals.
    Complex p_vilenkin_c(Complex xi) const;

    // Radial profile f with Psi(rho, phi) = f(rho) e^{-i(M+N) phi}; defined
    // for complex rho so dilation operators can rotate the argument.
    std::function<Complex(Complex)> radial_profile() const;

    int mode() const { return spin_.m_plus_n(); }
    const SpinTriple& spin() const { return spin_; }
    const QParam& q() const { return q_; }
    const QFunction& Q() const { return Q_; }

private:
    SpinTriple spin_;
    QParam q_;
    QFunction Q_;
    Complex plane_prefactor_;     // N^J_{MNq} q^{-NM/2}
    Complex vilenkin_prefactor_;  // i^{2J-M-N} ([J+M]![J+N]!/([J-M]![J-N]!))^{1/2}
    Complex spherical_prefactor_; // C_{JNq} ([J-N]!/([J+N]![2J]!))^{1/2} i^{-2J+M+N} q^{-NM/2}
};

// Classical (q = 1) counterparts; the q -> 1 oracles.
double classical_r_polynomial(const SpinTriple& spin, double eta);
Complex classical_vilenkin(const SpinTriple& spin, double xi);
Complex classical_psi_spherical(const SpinTriple& spin, double theta, double phi);
std::function<Complex(Complex)> classical_radial_profile(const SpinTriple& spin);

} // namespace qsu2

#pragma once

#include <utility>
#include <vector>

#include "qsu2/qparam.hpp"
#include "qsu2/quadrature.hpp"

namespace qsu2 {

// A point eta = r e^{i psi} with the ray angle kept unreduced.  L_q lives
// naturally on rays q^{-k} eta with k counting past +-pi, so the angle must
// not be wrapped before the reduction step decides how far the point sits
// from the principal sector.
struct RayPoint {
    double r;
    double psi;

    Complex to_complex() const;
    static RayPoint from_complex(Complex eta); // principal argument
};

// Evaluator for the solution L_q of the difference equation
//     L_q(q eta) - L_q(q^{-1} eta) = ln(1 + eta),   q = e^{i tau},
// given on the positive half-line by
//     L_q(eta) =  (1/2 pi i) int_0^inf dt/(t(1+t)) ln(1 + eta t^{ tau/pi}),  0 < tau < pi,
//     L_q(eta) = -(1/2 pi i) int_0^inf dt/(t(1+t)) ln(1 + eta t^{-tau/pi}),  -pi < tau < 0.
//
// The integral extends analytically to |arg eta| < pi; beyond the sector
// bound the value is continued by repeated use of the difference equation,
//     L(r e^{i psi}) = L(r e^{i(psi -+ 2|tau|)}) +- sgn(tau) Ln(1 + r e^{i(psi -+ |tau|)}),
// with principal logarithms at the (wrapped) midpoints.
class LqEvaluator {
public:
    explicit LqEvaluator(const QParam& q, double quad_tol = 1e-11,
                         double sector_bound = kDefaultSectorBound);

    // Principal-argument entry points (valid while the true ray angle of the
    // input has not wound past +-pi).
    Complex l_q(Complex eta) const;
    std::pair<Complex, Complex> reduce_to_sector(Complex eta) const;

    // Continuation-aware entry points.
    Complex l_q(RayPoint eta) const;
    // Returns (in-sector point, correction) with L(eta) = L(point) + correction.
    std::pair<RayPoint, Complex> reduce_to_sector(RayPoint eta) const;

    // Q_{J,q}(eta) = exp{ L(q^{-2J-1} eta) - L(q^{-1} eta) } for half-odd J.
    Complex q_half_integer(HalfInt J, RayPoint eta) const;

    double tau() const { return tau_; }
    double quad_tol() const { return quad_tol_; }
    double sector_bound() const { return sector_bound_; }

    static constexpr double kDefaultSectorBound = 2.9845130209103035; // 0.95 pi

private:
    Complex integral_in_sector(Complex eta) const;

    double tau_;
    double quad_tol_;
    double sector_bound_;
    QuadratureSpec quad_;
};

// Q_{J,q}(eta) for half-odd J, generic q on the unit circle, eta > 0.
Complex q_half_integer_circle(HalfInt J, double eta, const QParam& q, const LqEvaluator& ev);

// Closed product form of conj(Q(eta)) Q(q^{-2} eta) / ((1+eta)(1+q^{-2} eta)):
//     F_{J,q}(eta) = prod_{p=0}^{2J+1} (1 + q^{2J-2p} eta)^{-1}.
// Serves as the oracle for the continued L construction and as the kernel of
// the circle-regime norm integral.
Complex f_product(HalfInt J, Complex eta, const QParam& q);

} // namespace qsu2

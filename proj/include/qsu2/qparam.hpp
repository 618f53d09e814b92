#pragma once

#include <complex>
#include <stdexcept>

#include "qsu2/half_int.hpp"

namespace qsu2 {

using Complex = std::complex<double>;

enum class QRegime { PositiveReal, UnitCircle };

// Deformation parameter q with its regime:
//   PositiveReal:  q = e^tau,  tau real, tau != 0   (q = 1 is the separate
//                  classical path, never a QParam)
//   UnitCircle:    q = e^{i tau}, 0 < |tau| < pi, q generic (not close to a
//                  root of unity, so no q-factorial can vanish)
class QParam {
public:
    static constexpr int kDefaultGuardOrder = 64;

    static QParam positive_real(double tau);
    // Convenience: q given directly as a positive real number.
    static QParam from_real_q(double q);
    static QParam unit_circle(double tau, int guard_order = kDefaultGuardOrder);

    QRegime regime() const { return regime_; }
    double tau() const { return tau_; }
    int guard_order() const { return guard_order_; }
    bool is_real() const { return regime_ == QRegime::PositiveReal; }

    Complex q() const;
    // The real value of q; PositiveReal regime only.
    double real_q() const;

    QParam inverse() const;

    // q^x for real exponent x, defined as e^{x tau} or e^{i x tau}.  This is
    // the single branch convention used everywhere; fractional spin powers
    // such as q^{-NM/2} go through here.
    Complex pow(double x) const;

    // q - q^{-1}: 2 sinh(tau) or 2 i sin(tau).
    Complex q_minus_qinv() const;
    // ln q under the same convention: tau or i tau.
    Complex log_q() const;

private:
    QParam(QRegime regime, double tau, int guard_order)
        : regime_(regime), tau_(tau), guard_order_(guard_order) {}

    QRegime regime_;
    double tau_;
    int guard_order_;
};

// Guard order sized so that factorials up to [2J+1]_q! stay away from zero
// for every spin that a computation with maximal spin J_max can touch.
int guard_order_for(HalfInt j_max);

} // namespace qsu2

#pragma once

#include <memory>

#include "qsu2/contour.hpp"
#include "qsu2/qprod.hpp"

namespace qsu2 {

// Q_{J,q} with the representation picked by (J parity, q regime):
//   integer J, either regime     -> finite product
//   half-odd J, q real           -> convergent infinite product
//   half-odd J, q on the circle  -> exp of the L_q difference (contour route)
class QFunction {
public:
    QFunction(HalfInt J, const QParam& q, TruncationPolicy policy = {}, double lq_tol = 1e-11);

    Complex operator()(double eta) const;
    // Complex argument, ray angle taken as the principal argument.
    Complex operator()(Complex eta) const;
    // Continuation-aware entry for unreduced ray angles.
    Complex at_ray(RayPoint eta) const;

    HalfInt J() const { return j_; }
    const QParam& q() const { return q_; }
    const LqEvaluator* lq() const { return lq_.get(); }

private:
    HalfInt j_;
    QParam q_;
    TruncationPolicy policy_;
    std::shared_ptr<const LqEvaluator> lq_; // only for half-odd J on the circle
};

} // namespace qsu2

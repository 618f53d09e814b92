#pragma once

#include <functional>
#include <stdexcept>

#include "qsu2/qparam.hpp"

namespace qsu2 {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_intervals = 4000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::domain_error("QuadratureSpec: tolerances must be > 0");
        if (max_intervals < 1)
            throw std::domain_error("QuadratureSpec: max_intervals must be >= 1");
    }
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double est_error = 0.0;
    bool converged = false;
    long n_evals = 0;
};

using Integrand = std::function<Complex(double)>;

// Adaptive Gauss(7)/Kronrod(15) on a finite interval.  Deterministic for a
// fixed spec: the refinement order depends only on computed values.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec);

// Integral over (0, inf).  The half-line is folded onto (0,1) around the
// scale point s:  int_0^inf f = int_0^1 [ s f(s u) + (s/u^2) f(s/u) ] du.
QuadResult integrate_halfline(const Integrand& f, const QuadratureSpec& spec, double scale = 1.0);

} // namespace qsu2

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qsu2/qparam.hpp"

namespace qsu2 {

// A single Fourier mode f(rho) e^{-i m phi}.  Every generator maps modes to
// modes, which makes the phi-shift operators exact (multiplication by q^{+-m})
// and the dilations exact argument substitutions rho -> q rho.  The radial
// evaluator must accept complex rho: on the unit circle q rho leaves the
// positive axis.
struct AngularMode {
    int m = 0;
    std::function<Complex(Complex)> radial;
};

enum class Generator { H3, HPlus, HMinus, Casimir };

struct OperatorResult {
    AngularMode mode;
    Generator provenance;
};

// H_3 = i d/dphi - N: diagonal, eigenvalue m - N.
OperatorResult apply_h3(const AngularMode& mode, HalfInt N);

// Ladder operators in polar form; H_+ shifts m -> m+1, H_- shifts m -> m-1.
OperatorResult apply_h_plus(const AngularMode& mode, HalfInt N, const QParam& q);
OperatorResult apply_h_minus(const AngularMode& mode, HalfInt N, const QParam& q);

// Casimir C = H_+ H_- + [H_3]_q [H_3 - 1]_q, and the equivalent reversed
// ordering H_- H_+ + [H_3]_q [H_3 + 1]_q.
OperatorResult apply_casimir(const AngularMode& mode, HalfInt N, const QParam& q);
OperatorResult apply_casimir_reversed(const AngularMode& mode, HalfInt N, const QParam& q);

// Max residuals, over a rho grid, of the defining relations evaluated on the
// given mode: [H3, H+-] -+ H+- and [H+, H-] - [2 H3]_q.  Residuals are
// normalised by the grid sup of |f|.
struct CommutatorReport {
    double h3_ladder;
    double hplus_hminus;
    double scale;
};
CommutatorReport commutator_check(const AngularMode& mode, HalfInt N, const QParam& q,
                                  std::span<const double> rho_grid);

// Logarithmically spaced default grid on [lo, hi].
std::vector<double> default_rho_grid(int n = 30, double lo = 1e-2, double hi = 1e2);

// Grid sup-distance between two modes, and the sup of a single mode.
double grid_sup(const AngularMode& mode, std::span<const double> rho_grid);
double grid_distance(const AngularMode& a, const AngularMode& b,
                     std::span<const double> rho_grid);

} // namespace qsu2

#pragma once

#include <functional>
#include <vector>

#include "qsu2/algebra.hpp"
#include "qsu2/quadrature.hpp"
#include "qsu2/qprod.hpp"
#include "qsu2/vilenkin.hpp"

namespace qsu2 {

// A single-mode function supplied at both q and q^{-1}; every scalar-product
// formula couples the two members.
struct QPair {
    int m = 0;
    std::function<Complex(Complex)> at_q;
    std::function<Complex(Complex)> at_q_inv;
};

// Psi^J_{MN} packaged as a QPair of radial profiles.
QPair vilenkin_pair(const SpinTriple& spin, const QParam& q, TruncationPolicy policy = {},
                    double lq_tol = 1e-11);

// H_+ / H_- lifted to QPairs (the q^{-1} member is acted on with the
// operators at q^{-1}).
QPair pair_h_plus(const QPair& pair, HalfInt N, const QParam& q);
QPair pair_h_minus(const QPair& pair, HalfInt N, const QParam& q);

struct InnerProductReport {
    Complex value{0.0, 0.0};
    double est_error = 0.0;
    QRegime regime = QRegime::PositiveReal;
    bool converged = true;
};

// Scalar product unitarizing the realization for q real:
//   (q-q^{-1})/(2 ln q) int dz dzbar [ conj(psi1(q^{-1})) w_-(eta) q^{-rho d_rho - 1} psi2(q)
//                                    + conj(psi1(q))      w_+(eta) q^{+rho d_rho + 1} psi2(q^{-1}) ],
// reduced over the angular mode (orthogonal modes give exact 0).
InnerProductReport scalar_product_real_q(const QPair& psi1, const QPair& psi2, const QParam& q,
                                         const QuadratureSpec& spec = {});

// Circle-regime product: the first term couples the q members, the second
// the q^{-1} members.
InnerProductReport scalar_product_circle_q(const QPair& psi1, const QPair& psi2, const QParam& q,
                                           const QuadratureSpec& spec = {});

// Regime dispatch.
InnerProductReport scalar_product(const QPair& psi1, const QPair& psi2, const QParam& q,
                                  const QuadratureSpec& spec = {});

// Undeformed product 2 int dz dzbar (1+eta)^{-2} conj(psi1) psi2; the q -> 1
// reference for both deformed products.
InnerProductReport classical_scalar_product(int m1, const std::function<Complex(Complex)>& f1,
                                            int m2, const std::function<Complex(Complex)>& f2,
                                            const QuadratureSpec& spec = {});

// Orthonormality integral of the q-Vilenkin functions in the xi chart.  The
// flow operators q^{+-(xi^2-1) d_xi} act as eta -> q^{-+2} eta with
// eta = (1+xi)/(1-xi).  Returns the value whose contract is
// delta_{J1,J2} / [2 J2 + 1]_q.
InnerProductReport vilenkin_ortho_integral(HalfInt J1, HalfInt J2, HalfInt M, HalfInt N,
                                           const QParam& q, const QuadratureSpec& spec = {},
                                           TruncationPolicy policy = {}, double lq_tol = 1e-11);

struct DualEval {
    Complex quadrature{0.0, 0.0};
    Complex closed_form{0.0, 0.0};
    double est_error = 0.0;
    bool converged = true;
};

// Shared closed form 2 (ln q) q^{J+N+1} [J+N]_q! [J-N]_q! / ((q-q^{-1}) [2J+1]_q!)
// of both norm integrals.
Complex norm_integral_closed_form(HalfInt J, HalfInt N, const QParam& q);

// Norm integral for q real:
//   int_0^inf d eta Q_{J,q^{-1}}(eta) eta^{J+N} Q_{J,q}(q^{-2} eta) / ((1+eta)(1+q^{-2} eta)),
// quadrature vs closed form.
DualEval norm_integral_real(HalfInt J, HalfInt N, const QParam& q, const QuadratureSpec& spec = {},
                            TruncationPolicy policy = {});

// Norm integral for q on the circle: int_0^inf F_{J,q}(eta) eta^{J+N} d eta
// with the product kernel F.
DualEval norm_integral_circle(HalfInt J, HalfInt N, const QParam& q,
                              const QuadratureSpec& spec = {});

// Third route for the circle integral: partial fractions integrate to a sum
// of logarithms whose endpoint values give the integral in closed form.
Complex norm_integral_partial_fraction(HalfInt J, HalfInt N, const QParam& q);

// Ramanujan's continuous q-beta integral (0 < q < 1):
//   B~_q(x, y) = int_0^inf t^{x-1} prod_k (1+q^{x+y+k} t)/(1+q^k t) dt,
// quadrature vs the closed form at positive integers
//   (ln q) q^{-m(n+m-1)/2} [m-1]_{q^(1/2)}! [n-1]_{q^(1/2)}! /
//   ((q^(1/2)-q^(-1/2)) [n+m-1]_{q^(1/2)}!).
DualEval ramanujan_qbeta(int m, int n, double q, const QuadratureSpec& spec = {},
                         TruncationPolicy policy = {});

// Generic (non-integer) x: quadrature vs the reflection-product closed form
// (pi/sin pi x) prod_{k>=1} (1-q^{k-x})(1-q^{x+y+k-1}) / ((1-q^k)(1-q^{y+k-1})).
DualEval ramanujan_qbeta_generic(double x, double y, double q, const QuadratureSpec& spec = {},
                                 TruncationPolicy policy = {});

struct GramReport {
    std::vector<HalfInt> js;
    std::vector<Complex> entries; // row-major size x size
    int size = 0;
    double max_offdiag = 0.0;
    double max_diag_dev = 0.0;
    double min_eigenvalue = 0.0;
    double max_est_error = 0.0;

    Complex at(int i, int j) const { return entries[i * size + j]; }
};

// Gram matrix of { Psi^J_{MN} : J = max(|M|,|N|), ..., J_max } under the
// regime's scalar product, with a positivity report.
GramReport gram_matrix(HalfInt J_max, HalfInt M, HalfInt N, const QParam& q,
                       const QuadratureSpec& spec = {}, TruncationPolicy policy = {},
                       double lq_tol = 1e-11);

} // namespace qsu2

#pragma once

#include <stdexcept>

#include "qsu2/qcore.hpp"

namespace qsu2 {

// Truncation control for infinite products and series.
struct TruncationPolicy {
    double rel_tol = 1e-13;
    int max_terms = 512;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::domain_error("TruncationPolicy: rel_tol must be > 0");
        if (max_terms < 1) throw std::domain_error("TruncationPolicy: max_terms must be >= 1");
    }
};

// Signalled when a product/series fails to converge within max_terms.
// Carries the partial value and the last tail bound.
struct TruncationError : std::runtime_error {
    TruncationError(const std::string& what, Complex partial_, double bound_)
        : std::runtime_error(what), partial(partial_), bound(bound_) {}
    Complex partial;
    double bound;
};

// Q_{J,q}(eta) for integer J: the finite product
//   prod_{k=0}^{J-1} (1 + eta q^{-2J+2k})^{-1},
// valid in both regimes.  Throws if a denominator factor sits within the
// pole guard of zero.
Complex q_integer_J(HalfInt J, double eta, const QParam& q);

// Q_{J,q}(eta) for q real (J integer or half-odd), via the convergent
// infinite products: for 0<q<1 prod_k (1+q^{2k} eta)/(1+q^{-2J+2k} eta),
// for q>1 prod_k (1+q^{-2J-2k-2} eta)/(1+q^{-2k-2} eta).  Accumulated in
// log space.
double q_half_integer_real(HalfInt J, double eta, const QParam& q,
                           const TruncationPolicy& policy = {});

// A truncation policy with max_terms sized for the geometric tail rate
// e^{-2|tau|}; needed when q sits close to 1 and the products converge
// slowly.
TruncationPolicy policy_for_tau(double tau, double rel_tol = 1e-13);

// Basic hypergeometric series 1Phi0(a; -; base, z) = sum_k term_k with
//   term_{k+1}/term_k = z (1 - a base^k)/(1 - base^{k+1}).
// Requires |base| < 1 and |z| < 1; divergence is signalled explicitly.
Complex one_phi_zero(Complex a, Complex base, Complex z, const TruncationPolicy& policy = {});

namespace detail {
// Finite Q product at complex eta (needed when dilation operators rotate
// the argument off the positive half-line).
Complex q_integer_J(HalfInt J, Complex eta, const QParam& q);
} // namespace detail

} // namespace qsu2

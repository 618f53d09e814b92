#include "qsu2/algebra.hpp"

#include <cmath>

#include "qsu2/qcore.hpp"

namespace qsu2 {

OperatorResult apply_h3(const AngularMode& mode, HalfInt N) {
    const double eigenvalue = mode.m - N.value();
    auto f = mode.radial;
    AngularMode out{mode.m, [f, eigenvalue](Complex rho) { return eigenvalue * f(rho); }};
    return {std::move(out), Generator::H3};
}

// H_+ f e^{-im phi} = -e^{-i(m+1) phi}/(q - q^{-1})
//   [ (rho + 1/rho) q^{-N/2} f(q rho) - rho q^{-m + 3N/2} f(rho)
//     - (1/rho) q^{m - N/2} f(rho) ]
OperatorResult apply_h_plus(const AngularMode& mode, HalfInt N, const QParam& q) {
    const Complex inv_denom = 1.0 / q.q_minus_qinv();
    const Complex qv = q.q();
    const double n_half = 0.25 * N.twice();   // N/2
    const Complex q_mn = q.pow(-n_half);      // q^{-N/2}
    const Complex q_dil = q.pow(-mode.m + 3.0 * n_half);
    const Complex q_inv = q.pow(mode.m - n_half);
    auto f = mode.radial;
    AngularMode out{
        mode.m + 1, [=](Complex rho) {
            const Complex away = (rho + 1.0 / rho) * q_mn * f(qv * rho);
            const Complex local = rho * q_dil * f(rho) + (1.0 / rho) * q_inv * f(rho);
            return -inv_denom * (away - local);
        }};
    return {std::move(out), Generator::HPlus};
}

// H_- f e^{-im phi} = +e^{-i(m-1) phi}/(q - q^{-1})
//   [ (rho + 1/rho) q^{N/2} f(q rho) - rho q^{m - 3N/2} f(rho)
//     - (1/rho) q^{-m + N/2} f(rho) ]
OperatorResult apply_h_minus(const AngularMode& mode, HalfInt N, const QParam& q) {
    const Complex inv_denom = 1.0 / q.q_minus_qinv();
    const Complex qv = q.q();
    const double n_half = 0.25 * N.twice();
    const Complex q_pn = q.pow(n_half); // q^{+N/2}
    const Complex q_dil = q.pow(mode.m - 3.0 * n_half);
    const Complex q_inv = q.pow(-mode.m + n_half);
    auto f = mode.radial;
    AngularMode out{
        mode.m - 1, [=](Complex rho) {
            const Complex away = (rho + 1.0 / rho) * q_pn * f(qv * rho);
            const Complex local = rho * q_dil * f(rho) + (1.0 / rho) * q_inv * f(rho);
            return inv_denom * (away - local);
        }};
    return {std::move(out), Generator::HMinus};
}

namespace {

OperatorResult casimir_impl(const AngularMode& mode, HalfInt N, const QParam& q, bool reversed) {
    OperatorResult inner = reversed ? apply_h_plus(mode, N, q) : apply_h_minus(mode, N, q);
    OperatorResult outer =
        reversed ? apply_h_minus(inner.mode, N, q) : apply_h_plus(inner.mode, N, q);
    const double h3 = mode.m - N.value();
    const Complex diag =
        q_bracket(h3, q) * q_bracket(reversed ? h3 + 1.0 : h3 - 1.0, q);
    auto f = mode.radial;
    auto g = outer.mode.radial;
    AngularMode out{mode.m, [f, g, diag](Complex rho) { return g(rho) + diag * f(rho); }};
    return {std::move(out), Generator::Casimir};
}

} // namespace

OperatorResult apply_casimir(const AngularMode& mode, HalfInt N, const QParam& q) {
    return casimir_impl(mode, N, q, false);
}

OperatorResult apply_casimir_reversed(const AngularMode& mode, HalfInt N, const QParam& q) {
    return casimir_impl(mode, N, q, true);
}

std::vector<double> default_rho_grid(int n, double lo, double hi) {
    std::vector<double> grid(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) grid[i] = lo * std::exp(i * step);
    return grid;
}

double grid_sup(const AngularMode& mode, std::span<const double> rho_grid) {
    double sup = 0.0;
    for (double rho : rho_grid) sup = std::max(sup, std::abs(mode.radial(Complex(rho, 0.0))));
    return sup;
}

double grid_distance(const AngularMode& a, const AngularMode& b,
                     std::span<const double> rho_grid) {
    if (a.m != b.m) throw std::domain_error("grid_distance: modes differ in m");
    double sup = 0.0;
    for (double rho : rho_grid) {
        Complex x(rho, 0.0);
        sup = std::max(sup, std::abs(a.radial(x) - b.radial(x)));
    }
    return sup;
}

CommutatorReport commutator_check(const AngularMode& mode, HalfInt N, const QParam& q,
                                  std::span<const double> rho_grid) {
    const double scale = std::max(grid_sup(mode, rho_grid), 1e-300);

    // [H3, H+] - H+ on the mode.
    AngularMode hp = apply_h_plus(mode, N, q).mode;
    AngularMode h3hp = apply_h3(hp, N).mode;
    AngularMode h3f = apply_h3(mode, N).mode;
    AngularMode hph3 = apply_h_plus(h3f, N, q).mode;
    double ladder_res = 0.0;
    for (double rho : rho_grid) {
        Complex x(rho, 0.0);
        ladder_res = std::max(ladder_res,
                              std::abs(h3hp.radial(x) - hph3.radial(x) - hp.radial(x)));
    }

    // [H+, H-] - [2 H3]_q on the mode.
    AngularMode hm = apply_h_minus(mode, N, q).mode;
    AngularMode hphm = apply_h_plus(hm, N, q).mode;
    AngularMode hmhp = apply_h_minus(hp, N, q).mode;
    const Complex bracket = q_bracket(2.0 * (mode.m - N.value()), q);
    double comm_res = 0.0;
    for (double rho : rho_grid) {
        Complex x(rho, 0.0);
        Complex lhs = hphm.radial(x) - hmhp.radial(x);
        comm_res = std::max(comm_res, std::abs(lhs - bracket * mode.radial(x)));
    }

    return {ladder_res / scale, comm_res / scale, scale};
}

} // namespace qsu2

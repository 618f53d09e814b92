#include "qsu2/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qsu2/contour.hpp"

namespace qsu2::verify {

namespace {

std::string q_label(const QParam& q) {
    if (q.regime() == QRegime::PositiveReal)
        return "q=real:" + std::to_string(q.real_q());
    return "q=circle:" + std::to_string(q.tau());
}

Check make_check(std::string suite, std::string name, std::string identity, double residual,
                 double tolerance, std::string note = {}) {
    Check c;
    c.suite = std::move(suite);
    c.name = std::move(name);
    c.identity = std::move(identity);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    c.note = std::move(note);
    return c;
}

std::vector<QParam> default_or(const Options& opts, std::vector<QParam> defaults) {
    return opts.qs.empty() ? std::move(defaults) : opts.qs;
}

std::vector<HalfInt> spin_range(HalfInt j_max) {
    std::vector<HalfInt> out;
    for (int t = 0; t <= j_max.twice(); ++t) out.push_back(HalfInt::from_twice(t));
    return out;
}

double pick_tol(const Options& opts, double fallback) {
    return opts.tol > 0.0 ? opts.tol : fallback;
}

AngularMode psi_mode(const SpinTriple& s, const QParam& q, const TruncationPolicy& policy,
                     double lq_tol) {
    return {s.m_plus_n(), VilenkinFunction(s, q, policy, lq_tol).radial_profile()};
}

double ladder_coefficient(const SpinTriple& s, const QParam& q, int dir) {
    Complex a = q_bracket(dir > 0 ? s.J - s.M : s.J + s.M, q);
    Complex b = q_bracket((dir > 0 ? s.J + s.M : s.J - s.M) + 1, q);
    return std::sqrt((a * b).real());
}

QPair bump_pair(int m, double center) {
    auto f = [center, m](Complex rho) {
        return cpow_int(rho, std::abs(m)) * std::exp(-(rho - center) * (rho - center));
    };
    return {m, f, f};
}

} // namespace

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass || c.skipped; });
}

std::vector<std::string> suite_names() {
    return {"ladder", "casimir", "functional-eq", "lemma1",
            "ortho",  "norms",   "qbeta",         "classical-limit"};
}

std::vector<Check> run_suite(const std::string& suite, const Options& opts) {
    if (suite == "ladder") return ladder_suite(opts);
    if (suite == "casimir") return casimir_suite(opts);
    if (suite == "functional-eq") return functional_eq_suite(opts);
    if (suite == "lemma1") return lemma1_suite(opts);
    if (suite == "ortho") return ortho_suite(opts);
    if (suite == "norms") return norms_suite(opts);
    if (suite == "qbeta") return qbeta_suite(opts);
    if (suite == "classical-limit") return classical_limit_suite(opts);
    if (suite == "all") {
        std::vector<Check> out;
        for (const auto& name : suite_names()) {
            auto part = run_suite(name, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<Check> ladder_suite(const Options& opts) {
    const double tol = pick_tol(opts, 1e-8);
    const auto qs = default_or(
        opts, {QParam::from_real_q(2.0), QParam::from_real_q(0.5), QParam::unit_circle(0.3)});
    const HalfInt j_max = opts.j_max.value_or(HalfInt::of_int(2));
    const auto grid = default_rho_grid(opts.grid_points);

    std::vector<Check> out;
    const std::string identity =
        "H+- Psi^J_{M,N} = ([J-+M]_q [J+-M+1]_q)^{1/2} Psi^J_{M+-1,N}";
    for (const QParam& q : qs) {
        for (HalfInt J : spin_range(j_max)) {
            for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
                HalfInt N = HalfInt::from_twice(tn);
                double worst = 0.0;
                for (int tm = -J.twice(); tm <= J.twice(); tm += 2) {
                    SpinTriple s(J, HalfInt::from_twice(tm), N);
                    AngularMode mode = psi_mode(s, q, opts.policy, opts.lq_tol);
                    const double scale = std::max(grid_sup(mode, grid), 1e-300);
                    for (int dir : {+1, -1}) {
                        auto res = dir > 0 ? apply_h_plus(mode, N, q) : apply_h_minus(mode, N, q);
                        AngularMode expect;
                        if ((dir > 0 && s.M == J) || (dir < 0 && s.M == -J)) {
                            expect = {res.mode.m, [](Complex) { return Complex(0.0, 0.0); }};
                        } else {
                            SpinTriple target(J, s.M + dir, N);
                            AngularMode t = psi_mode(target, q, opts.policy, opts.lq_tol);
                            double c = ladder_coefficient(s, q, dir);
                            expect = {t.m, [t, c](Complex rho) { return c * t.radial(rho); }};
                        }
                        worst = std::max(worst, grid_distance(res.mode, expect, grid) / scale);
                    }
                }
                out.push_back(make_check("ladder",
                                         "ladder " + q_label(q) + " J=" + J.to_string() +
                                             " N=" + N.to_string(),
                                         identity, worst, tol));
            }
        }
    }
    return out;
}

std::vector<Check> casimir_suite(const Options& opts) {
    const double tol = pick_tol(opts, 1e-8);
    const auto qs = default_or(
        opts, {QParam::from_real_q(2.0), QParam::from_real_q(0.5), QParam::unit_circle(0.3)});
    const HalfInt j_max = opts.j_max.value_or(HalfInt::of_int(2));
    const auto grid = default_rho_grid(opts.grid_points);

    std::vector<Check> out;

    // exact bracket arithmetic at J = 1/2, q = 2
    {
        QParam q2 = QParam::from_real_q(2.0);
        double value = (q_bracket(0.5, q2) * q_bracket(1.5, q2)).real();
        out.push_back(make_check("casimir", "casimir eigenvalue arithmetic J=1/2 q=real:2",
                                 "[1/2]_2 [3/2]_2 = 7/9", std::abs(value - 7.0 / 9.0), 1e-12));
    }

    for (const QParam& q : qs) {
        for (HalfInt J : spin_range(j_max)) {
            const Complex eig = q_bracket(J, q) * q_bracket(J + 1, q);
            for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
                HalfInt N = HalfInt::from_twice(tn);
                double worst_eig = 0.0;
                double worst_order = 0.0;
                for (int tm = -J.twice(); tm <= J.twice(); tm += 2) {
                    SpinTriple s(J, HalfInt::from_twice(tm), N);
                    AngularMode mode = psi_mode(s, q, opts.policy, opts.lq_tol);
                    const double scale = std::max(grid_sup(mode, grid), 1e-300);
                    auto c1 = apply_casimir(mode, N, q);
                    auto c2 = apply_casimir_reversed(mode, N, q);
                    for (double rho : grid) {
                        Complex x(rho, 0.0);
                        Complex v1 = c1.mode.radial(x);
                        worst_eig =
                            std::max(worst_eig, std::abs(v1 - eig * mode.radial(x)) / scale);
                        worst_order =
                            std::max(worst_order, std::abs(v1 - c2.mode.radial(x)) / scale);
                    }
                }
                out.push_back(make_check("casimir",
                                         "casimir eigenvalue " + q_label(q) +
                                             " J=" + J.to_string() + " N=" + N.to_string(),
                                         "C Psi = [J]_q [J+1]_q Psi", worst_eig, tol));
                out.push_back(make_check(
                    "casimir",
                    "casimir orderings " + q_label(q) + " J=" + J.to_string() +
                        " N=" + N.to_string(),
                    "H+H- + [H3]_q[H3-1]_q = H-H+ + [H3]_q[H3+1]_q", worst_order,
                    pick_tol(opts, 1e-10)));
            }
        }
    }
    return out;
}

std::vector<Check> functional_eq_suite(const Options& opts) {
    const double tol = pick_tol(opts, 1e-9);
    std::vector<Check> out;
    const std::string identity = "Q(q^2 eta)(1 + eta) = Q(eta)(1 + q^{-2J} eta)";

    const auto qs = default_or(
        opts, {QParam::from_real_q(2.0), QParam::from_real_q(0.5), QParam::unit_circle(0.3)});
    for (const QParam& q : qs) {
        for (const char* js : {"1", "2", "1/2", "3/2"}) {
            HalfInt J = parse_half_int(js);
            const char* label =
                J.is_integer() ? (q.is_real() ? "integer J, real q" : "integer J, circle q")
                               : (q.is_real() ? "half-odd J, real q" : "half-odd J, circle q");

            QFunction Q(J, q, opts.policy, opts.lq_tol);
            const Complex qm2j = q.pow(-static_cast<double>(J.twice()));
            double worst = 0.0;
            for (double eta = 0.01; eta <= 100.0 * 1.0001;
                 eta *= std::pow(1e4, 1.0 / 12.0)) {
                Complex q_eta = Q(eta);
                Complex q_shift = q.is_real()
                                      ? Q(std::exp(2.0 * q.tau()) * eta)
                                      : Q.at_ray(RayPoint{eta, 2.0 * q.tau()});
                Complex lhs = q_shift * (1.0 + eta);
                Complex rhs = q_eta * (1.0 + qm2j * eta);
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(q_eta));
            }
            out.push_back(make_check("functional-eq",
                                     std::string("functional equation ") + label + " " +
                                         q_label(q) + " J=" + J.to_string(),
                                     identity, worst, tol));
        }
    }
    return out;
}

std::vector<Check> lemma1_suite(const Options& opts) {
    std::vector<Check> out;
    std::vector<double> taus = {0.2, 0.7, 2.0, -0.2, -0.7, -2.0};
    if (!opts.qs.empty()) {
        taus.clear();
        for (const QParam& q : opts.qs)
            if (!q.is_real()) taus.push_back(q.tau());
    }
    const std::vector<double> etas = {0.1, 1.0, 10.0};

    for (double tau : taus) {
        LqEvaluator ev(QParam::unit_circle(tau), opts.lq_tol);

        double worst_diff = 0.0;
        double worst_re = 0.0;
        double worst_conj = 0.0;
        for (double eta : etas) {
            Complex diff = ev.l_q(RayPoint{eta, tau}) - ev.l_q(RayPoint{eta, -tau});
            worst_diff = std::max(worst_diff, std::abs(diff - std::log(1.0 + eta)));
            Complex v = ev.l_q(Complex(eta, 0.0));
            worst_re = std::max(worst_re, std::abs(v.real()));
            worst_conj = std::max(worst_conj, std::abs(std::conj(v) + v));
        }
        out.push_back(make_check("lemma1", "difference equation tau=" + std::to_string(tau),
                                 "L(q eta) - L(q^{-1} eta) = ln(1 + eta)", worst_diff,
                                 pick_tol(opts, 1e-7)));
        out.push_back(make_check("lemma1", "imaginary value tau=" + std::to_string(tau),
                                 "Re L(eta) = 0 for eta > 0", worst_re, pick_tol(opts, 1e-10)));
        out.push_back(make_check("lemma1", "conjugation tau=" + std::to_string(tau),
                                 "conj(L(eta)) = -L(eta) for eta > 0", worst_conj,
                                 pick_tol(opts, 1e-10)));

        double worst_kernel = 0.0;
        QParam q = QParam::unit_circle(tau);
        for (const char* js : {"1/2", "3/2", "5/2"}) {
            HalfInt J = parse_half_int(js);
            for (double eta : etas) {
                Complex q_eta = ev.q_half_integer(J, RayPoint{eta, 0.0});
                Complex q_shift = ev.q_half_integer(J, RayPoint{eta, -2.0 * tau});
                Complex lhs = std::conj(q_eta) * q_shift /
                              ((1.0 + eta) * (1.0 + std::polar(eta, -2.0 * tau)));
                Complex rhs = f_product(J, Complex(eta, 0.0), q);
                worst_kernel = std::max(worst_kernel, std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
        out.push_back(make_check(
            "lemma1", "kernel product tau=" + std::to_string(tau),
            "conj(Q(eta)) Q(q^{-2}eta) / ((1+eta)(1+q^{-2}eta)) = prod_p (1+q^{2J-2p}eta)^{-1}",
            worst_kernel, pick_tol(opts, 1e-7)));
    }

    // mirror identity between the two branches
    {
        double worst = 0.0;
        LqEvaluator plus(QParam::unit_circle(0.7), opts.lq_tol);
        LqEvaluator minus(QParam::unit_circle(-0.7), opts.lq_tol);
        for (double eta : etas)
            worst = std::max(
                worst, std::abs(plus.l_q(Complex(eta, 0.0)) + minus.l_q(Complex(eta, 0.0))));
        out.push_back(make_check("lemma1", "mirror branches tau=+-0.7",
                                 "L at tau and at -tau are negatives on eta > 0", worst,
                                 pick_tol(opts, 1e-10)));
    }
    return out;
}

std::vector<Check> ortho_suite(const Options& opts) {
    const double tol = pick_tol(opts, 1e-6);
    const auto qs = default_or(opts, {QParam::from_real_q(2.0), QParam::unit_circle(0.3)});
    std::vector<Check> out;

    const HalfInt m = opts.m.value_or(parse_half_int("1/2"));
    const HalfInt n = opts.n.value_or(parse_half_int("1/2"));
    const HalfInt j_max = opts.j_max.value_or(parse_half_int("5/2"));

    for (const QParam& q : qs) {
        auto g = gram_matrix(j_max, m, n, q, opts.quad, opts.policy, opts.lq_tol);
        out.push_back(make_check("ortho",
                                 "gram identity " + q_label(q) + " Jmax=" + j_max.to_string() +
                                     " M=" + m.to_string() + " N=" + n.to_string(),
                                 "<Psi^{J'}_{MN} | Psi^J_{MN}>_q = delta_{J'J}",
                                 std::max(g.max_offdiag, g.max_diag_dev), tol,
                                 "min eigenvalue " + std::to_string(g.min_eigenvalue)));
        out.push_back(make_check("ortho", "gram positivity " + q_label(q),
                                 "Gram matrix is positive definite",
                                 g.min_eigenvalue > 0.0 ? 0.0 : 1.0, 0.5));
    }

    // xi-chart orthonormality integrals
    struct Pair {
        const char *j1, *j2, *m, *n;
    };
    const std::vector<Pair> pairs = {{"1", "1", "0", "0"},
                                     {"1", "2", "0", "0"},
                                     {"2", "2", "0", "0"},
                                     {"1/2", "1/2", "1/2", "1/2"},
                                     {"1/2", "3/2", "1/2", "1/2"}};
    for (const QParam& q : qs) {
        for (const auto& p : pairs) {
            HalfInt j1 = parse_half_int(p.j1), j2 = parse_half_int(p.j2);
            auto r = vilenkin_ortho_integral(j1, j2, parse_half_int(p.m), parse_half_int(p.n), q,
                                             opts.quad, opts.policy, opts.lq_tol);
            Complex expect = j1 == j2 ? 1.0 / q_bracket(j2 + j2 + 1, q) : Complex(0.0, 0.0);
            out.push_back(make_check("ortho",
                                     std::string("orthogonality integral ") + q_label(q) +
                                         " J'=" + p.j1 + " J=" + p.j2 + " M=" + p.m +
                                         " N=" + p.n,
                                     "xi-chart integral = delta_{J'J} / [2J+1]_q",
                                     std::abs(r.value - expect), tol));
        }
    }
    return out;
}

std::vector<Check> norms_suite(const Options& opts) {
    const double tol = pick_tol(opts, 1e-7);
    std::vector<Check> out;
    const HalfInt j_max = opts.j_max.value_or(HalfInt::of_int(2));

    // real-regime integral against the closed form, both product branches
    for (double qv : {2.0, 0.5}) {
        QParam q = QParam::from_real_q(qv);
        double worst = 0.0;
        for (HalfInt J : spin_range(j_max)) {
            for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
                auto r =
                    norm_integral_real(J, HalfInt::from_twice(tn), q, opts.quad, opts.policy);
                worst = std::max(
                    worst, std::abs(r.quadrature - r.closed_form) / std::abs(r.closed_form));
            }
        }
        out.push_back(make_check(
            "norms", "norm integral real " + q_label(q) + " J<=" + j_max.to_string(),
            "int Q_{q^{-1}}(eta) eta^{J+N} Q_q(q^{-2}eta) w(eta) d eta = closed form", worst,
            tol));
    }

    // circle-regime integral: quadrature vs closed form vs partial fractions
    {
        QParam q = QParam::unit_circle(0.3);
        for (const QParam& cand : opts.qs)
            if (!cand.is_real()) q = cand;
        double worst = 0.0, worst_pf = 0.0;
        for (HalfInt J : spin_range(j_max)) {
            for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
                HalfInt N = HalfInt::from_twice(tn);
                auto r = norm_integral_circle(J, N, q, opts.quad);
                worst = std::max(
                    worst, std::abs(r.quadrature - r.closed_form) / std::abs(r.closed_form));
                Complex pf = norm_integral_partial_fraction(J, N, q);
                worst_pf =
                    std::max(worst_pf, std::abs(pf - r.closed_form) / std::abs(r.closed_form));
            }
        }
        out.push_back(make_check("norms",
                                 "norm integral circle " + q_label(q) +
                                     " J<=" + j_max.to_string(),
                                 "int F_{J,q}(eta) eta^{J+N} d eta = closed form", worst, tol));
        out.push_back(make_check("norms", "norm integral partial fractions " + q_label(q),
                                 "log antiderivative endpoints reproduce the closed form",
                                 worst_pf, pick_tol(opts, 1e-10)));
    }

    // q-binomial identities underlying the circle closed form
    {
        double worst_alt = 0.0, worst_weighted = 0.0;
        for (const QParam& q : {QParam::from_real_q(2.0), QParam::unit_circle(0.3)}) {
            for (int tj = 0; tj <= 6; ++tj) {
                HalfInt J = HalfInt::from_twice(tj);
                for (int tn = -tj; tn <= tj; tn += 2) {
                    HalfInt N = HalfInt::from_twice(tn);
                    auto alt = alternating_qbinomial_sum_scaled(J, N, q);
                    worst_alt = std::max(worst_alt, std::abs(alt.value) / alt.term_scale);
                    auto lhs = weighted_qbinomial_sum_scaled(J, N, q);
                    Complex rhs = weighted_qbinomial_closed_form(J, N, q);
                    worst_weighted = std::max(
                        worst_weighted,
                        std::abs(lhs.value - rhs) / std::max(lhs.term_scale, std::abs(rhs)));
                }
            }
        }
        out.push_back(make_check("norms", "alternating q-binomial sum J<=3 q=real:2,circle:0.3",
                                 "sum_p (-1)^p C_q(2J+1,p) q^{2Np} = 0", worst_alt,
                                 pick_tol(opts, 1e-10)));
        out.push_back(make_check("norms", "weighted q-binomial sum J<=3 q=real:2,circle:0.3",
                                 "sum_p (-1)^{p-1} p C_q(2J+1,p) q^{2N(p-1)} = "
                                 "(-1)^{J+N}(q-q^{-1})^{2J}[J-N]_q![J+N]_q! q^{N(2J-1)}",
                                 worst_weighted, pick_tol(opts, 1e-10)));
    }
    return out;
}

std::vector<Check> qbeta_suite(const Options& opts) {
    const double tol = pick_tol(opts, 1e-7);
    std::vector<Check> out;

    double worst = 0.0;
    for (double qv : {0.3, 0.5, 0.8}) {
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 3; ++n) {
                auto r = ramanujan_qbeta(m, n, qv, opts.quad, opts.policy);
                worst = std::max(
                    worst, std::abs(r.quadrature - r.closed_form) / std::abs(r.closed_form));
            }
        }
    }
    out.push_back(make_check("qbeta", "continuous q-beta m,n<=3 q in {0.3,0.5,0.8}",
                             "int t^{m-1} prod_k (1+q^{m+n+k}t)/(1+q^k t) dt = closed form",
                             worst, tol));

    {
        auto r = ramanujan_qbeta(1, 1, 0.5, opts.quad, opts.policy);
        out.push_back(make_check("qbeta", "q-beta(1,1) at q=1/2", "B~_{1/2}(1,1) = 2 ln 2",
                                 std::abs(r.quadrature.real() - 2.0 * std::log(2.0)),
                                 pick_tol(opts, 1e-9)));
    }
    {
        auto r = ramanujan_qbeta_generic(1.5, 1.0, 0.5, opts.quad, opts.policy);
        out.push_back(make_check(
            "qbeta", "generic-exponent q-beta x=1.5 y=1 q=0.5",
            "quadrature matches the reflection-product closed form",
            std::abs(r.quadrature - r.closed_form) / std::abs(r.closed_form), tol));
    }
    return out;
}

std::vector<Check> classical_limit_suite(const Options& opts) {
    const double tol = pick_tol(opts, 5e-3);
    std::vector<Check> out;
    const double eps = 1e-4;
    const HalfInt j_max = opts.j_max.value_or(HalfInt::of_int(2));

    // q-Vilenkin functions against the undeformed ones
    {
        QParam q = QParam::positive_real(eps);
        TruncationPolicy policy = policy_for_tau(eps);
        double worst = 0.0;
        for (HalfInt J : spin_range(j_max)) {
            for (int tm = -J.twice(); tm <= J.twice(); tm += 2) {
                for (int tn = -J.twice(); tn <= J.twice(); tn += 2) {
                    SpinTriple s(J, HalfInt::from_twice(tm), HalfInt::from_twice(tn));
                    VilenkinFunction psi(s, q, policy);
                    for (double xi = -0.99; xi <= 0.991; xi += 0.0825) {
                        worst = std::max(
                            worst, std::abs(psi.p_vilenkin(xi) - classical_vilenkin(s, xi)));
                    }
                }
            }
        }
        out.push_back(make_check("classical-limit",
                                 "q-Vilenkin functions at q=e^{1e-4}, J<=" + j_max.to_string(),
                                 "P^J_{MN,q} -> P^J_{MN} as q -> 1 (sup norm on [-0.99, 0.99])",
                                 worst, tol));
    }

    // both scalar products against the undeformed product on a test pair
    {
        QPair a = bump_pair(1, 1.5);
        QPair b = bump_pair(1, 2.0);
        auto classical = classical_scalar_product(a.m, a.at_q, b.m, b.at_q, opts.quad);
        auto real_r = scalar_product_real_q(a, b, QParam::positive_real(eps), opts.quad);
        auto circ_r = scalar_product_circle_q(a, b, QParam::unit_circle(eps), opts.quad);
        out.push_back(make_check("classical-limit", "real-regime product at q=e^{1e-4}",
                                 "<.|.>_q approaches the undeformed product",
                                 std::abs(real_r.value - classical.value), tol));
        out.push_back(make_check("classical-limit", "circle-regime product at q=e^{i 1e-4}",
                                 "<.|.>_q approaches the undeformed product",
                                 std::abs(circ_r.value - classical.value), tol));
    }

    // realization limit: ladder operators against the undeformed ones
    {
        QParam q = QParam::positive_real(1e-6);
        const HalfInt N = HalfInt::of_int(1);
        const int m = 1;
        AngularMode mode{m, bump_pair(m, 2.0).at_q};
        auto deriv = [](Complex rho) {
            Complex g = std::exp(-(rho - 2.0) * (rho - 2.0));
            return (2.0 * rho - rho * rho * 2.0 * (rho - 2.0)) * g;
        };
        auto up = apply_h_plus(mode, N, q);
        auto down = apply_h_minus(mode, N, q);
        auto grid = default_rho_grid(opts.grid_points, 1e-1, 1e1);
        double scale = std::max(grid_sup(mode, grid), 1e-300);
        double worst = 0.0;
        for (double rho : grid) {
            Complex x(rho, 0.0);
            Complex f = mode.radial(x);
            Complex fp = deriv(x);
            Complex cl_up = -0.5 * (fp - (m / rho) * f) -
                            0.5 * rho * rho * (fp + (m / rho) * f) + N.value() * rho * f;
            Complex cl_down = 0.5 * rho * rho * (fp - (m / rho) * f) +
                              0.5 * (fp + (m / rho) * f) + N.value() * rho * f;
            worst = std::max(worst, std::abs(up.mode.radial(x) - cl_up) / scale);
            worst = std::max(worst, std::abs(down.mode.radial(x) - cl_down) / scale);
        }
        out.push_back(make_check("classical-limit", "realization at q=e^{1e-6}",
                                 "H+- approach the undeformed ladder operators", worst,
                                 pick_tol(opts, 1e-4)));
    }
    return out;
}

} // namespace qsu2::verify

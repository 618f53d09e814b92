#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsu2/qcore.hpp"

using namespace qsu2;

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_CASE("half-integer labels are exact") {
    HalfInt j = parse_half_int("3/2");
    CHECK(j.twice() == 3);
    CHECK(j.value() == doctest::Approx(1.5));
    CHECK(!j.is_integer());
    CHECK(parse_half_int("-2").twice() == -4);
    CHECK(parse_half_int("-5/2").twice() == -5);
    CHECK(parse_half_int("4/2").twice() == 4);
    CHECK_THROWS_AS(parse_half_int("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int("3/4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_half_int(""), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::from_twice(3).as_int(), std::domain_error);
    CHECK(HalfInt::from_twice(4).as_int() == 2);
}

TEST_CASE("spin triples enforce parity and ranges") {
    CHECK_NOTHROW(SpinTriple(parse_half_int("3/2"), parse_half_int("1/2"), parse_half_int("-3/2")));
    CHECK_THROWS_AS(SpinTriple(HalfInt::of_int(1), HalfInt::from_twice(1), HalfInt::of_int(0)),
                    std::domain_error);
    CHECK_THROWS_AS(SpinTriple(HalfInt::of_int(1), HalfInt::of_int(2), HalfInt::of_int(0)),
                    std::domain_error);
    CHECK_THROWS_AS(SpinTriple(HalfInt::of_int(-1), HalfInt::of_int(0), HalfInt::of_int(0)),
                    std::domain_error);
}

TEST_CASE("q parameter invariants") {
    CHECK_THROWS_AS(QParam::positive_real(0.0), std::domain_error);
    CHECK_THROWS_AS(QParam::from_real_q(1.0), std::domain_error);
    CHECK_THROWS_AS(QParam::from_real_q(-2.0), std::domain_error);
    CHECK_THROWS_AS(QParam::unit_circle(kPi), std::domain_error);
    CHECK_THROWS_AS(QParam::unit_circle(0.0), std::domain_error);
    // roots of unity are rejected by the genericity guard
    CHECK_THROWS_AS(QParam::unit_circle(kPi / 2.0), std::domain_error);
    CHECK_THROWS_AS(QParam::unit_circle(3.0 * kPi / 7.0), std::domain_error);
    // a tiny tau is generic: brackets stay near their classical values
    CHECK_NOTHROW(QParam::unit_circle(1e-4));
    CHECK_NOTHROW(QParam::unit_circle(0.3));
    CHECK(QParam::from_real_q(2.0).real_q() == doctest::Approx(2.0));
    CHECK(QParam::from_real_q(2.0).inverse().real_q() == doctest::Approx(0.5));
    CHECK(guard_order_for(parse_half_int("5/2")) == QParam::kDefaultGuardOrder);
    CHECK(guard_order_for(HalfInt::of_int(20)) == 84);
}

TEST_CASE("q-bracket values") {
    QParam q2 = QParam::from_real_q(2.0);
    QParam qc = QParam::unit_circle(kPi / 5.0, 4);

    CHECK(std::abs(q_bracket(0.0, q2)) == 0.0);
    CHECK(q_bracket(3.0, q2).real() == doctest::Approx(5.25).epsilon(1e-14));
    CHECK(q_bracket(2.0, qc).real() == doctest::Approx(2.0 * std::cos(kPi / 5.0)).epsilon(1e-14));
    CHECK(q_bracket(2.0, qc).imag() == 0.0);

    // [-x]_q = -[x]_q and [x]_{q^{-1}} = [x]_q
    for (double x : {0.5, 1.0, 2.5, 7.0}) {
        for (const QParam& q : {q2, qc}) {
            CHECK(q_bracket(-x, q).real() == doctest::Approx(-q_bracket(x, q).real()));
            CHECK(q_bracket(x, q.inverse()).real() == doctest::Approx(q_bracket(x, q).real()));
        }
    }
}

TEST_CASE("q-bracket classical continuity is second order") {
    for (double x : {0.5, 2.0, 3.5}) {
        double dev3 = std::abs(q_bracket(x, QParam::positive_real(1e-3)).real() - x);
        double dev4 = std::abs(q_bracket(x, QParam::positive_real(1e-4)).real() - x);
        const double c = std::abs(x * (x * x - 1.0)) / 6.0 + 1.0;
        CHECK(dev3 <= c * 1e-6);
        CHECK(dev4 <= c * 1e-8);
    }
}

TEST_CASE("q-factorials and binomials") {
    QParam q2 = QParam::from_real_q(2.0);
    QParam qc5 = QParam::unit_circle(kPi / 5.0, 4);
    QParam qc7 = QParam::unit_circle(kPi / 7.0, 6);

    CHECK(q_factorial(0, q2).real() == 1.0);
    CHECK(q_factorial(3, q2).real() == doctest::Approx(13.125).epsilon(1e-14));
    CHECK(q_factorial(2, qc5).real() ==
          doctest::Approx(2.0 * std::cos(kPi / 5.0)).epsilon(1e-14));
    CHECK(inverse_q_factorial(-1, q2) == Complex(0.0, 0.0));
    CHECK(inverse_q_factorial(-3, qc5) == Complex(0.0, 0.0));
    CHECK(inverse_q_factorial(2, q2).real() == doctest::Approx(0.4).epsilon(1e-14));

    CHECK(q_binomial(5, 0, q2).real() == 1.0);
    CHECK(q_binomial(2, 1, q2).real() == doctest::Approx(2.5).epsilon(1e-14));
    {
        // direct evaluation of [4]!/([2]!)^2 in the sin form
        auto br = [&](int k) { return std::sin(k * kPi / 7.0) / std::sin(kPi / 7.0); };
        double expect = br(4) * br(3) / (br(2) * br(1));
        CHECK(q_binomial(4, 2, qc7).real() == doctest::Approx(expect).epsilon(1e-13));
        CHECK(q_binomial(4, 2, qc7).imag() == 0.0);
    }
    CHECK_THROWS_AS(q_binomial(3, 4, q2), std::domain_error);
    CHECK_THROWS_AS(q_binomial(3, -1, q2), std::domain_error);

    // symmetry under p <-> n-p
    for (int n = 0; n <= 7; ++n)
        for (int p = 0; p <= n; ++p)
            CHECK(std::abs(q_binomial(n, p, q2) - q_binomial(n, n - p, q2)) < 1e-10);
}

TEST_CASE("alternating q-binomial sum vanishes") {
    QParam q2 = QParam::from_real_q(2.0);
    QParam qc6 = QParam::unit_circle(kPi / 6.0, 4);
    QParam qc3 = QParam::unit_circle(0.3);

    // J = 0: 1 - 1
    CHECK(std::abs(alternating_qbinomial_sum(HalfInt::of_int(0), HalfInt::of_int(0), q2)) <
          1e-15);
    {
        auto s = alternating_qbinomial_sum_scaled(parse_half_int("1/2"), parse_half_int("1/2"), q2);
        CHECK(std::abs(s.value) / s.term_scale < 1e-12);
    }
    {
        auto s = alternating_qbinomial_sum_scaled(HalfInt::of_int(1), HalfInt::of_int(0), qc6);
        CHECK(std::abs(s.value) / s.term_scale < 1e-12);
    }

    for (int tj = 0; tj <= 6; ++tj) {
        HalfInt J = HalfInt::from_twice(tj);
        for (int tn = -tj; tn <= tj; tn += 2) {
            HalfInt N = HalfInt::from_twice(tn);
            for (const QParam& q : {q2, qc3}) {
                auto s = alternating_qbinomial_sum_scaled(J, N, q);
                CHECK(std::abs(s.value) / s.term_scale < 1e-10);
            }
        }
    }
}

TEST_CASE("weighted q-binomial sum equals its closed form") {
    QParam q2 = QParam::from_real_q(2.0);
    QParam qc3 = QParam::unit_circle(0.3);

    // hand value at J = N = 1/2, q = 2: sum = [2]_2 - 2 q = 2.5 - 4 = -1.5
    {
        auto s = weighted_qbinomial_sum_scaled(parse_half_int("1/2"), parse_half_int("1/2"), q2);
        CHECK(s.value.real() == doctest::Approx(-1.5).epsilon(1e-13));
        Complex rhs = weighted_qbinomial_closed_form(parse_half_int("1/2"), parse_half_int("1/2"), q2);
        CHECK(rhs.real() == doctest::Approx(-1.5).epsilon(1e-13));
    }

    for (int tj = 0; tj <= 6; ++tj) {
        HalfInt J = HalfInt::from_twice(tj);
        for (int tn = -tj; tn <= tj; tn += 2) {
            HalfInt N = HalfInt::from_twice(tn);
            for (const QParam& q : {q2, qc3}) {
                auto lhs = weighted_qbinomial_sum_scaled(J, N, q);
                Complex rhs = weighted_qbinomial_closed_form(J, N, q);
                double scale = std::max(lhs.term_scale, std::abs(rhs));
                CHECK(std::abs(lhs.value - rhs) / scale < 1e-10);
            }
        }
    }
}

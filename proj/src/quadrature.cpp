#include "qsu2/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace qsu2 {

namespace {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Cell {
    double a, b;
    Complex value;
    double error;
    long seq; // creation order; deterministic tie-break
};

struct CellLess {
    bool operator()(const Cell& x, const Cell& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

Cell gk15(const Integrand& f, double a, double b, long seq, long& evals) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    Complex fv[15];
    fv[7] = f(mid);
    evals += 1;
    Complex kronrod = kWgk[7] * fv[7];
    Complex gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        fv[i] = f(mid - dx);
        fv[14 - i] = f(mid + dx);
        evals += 2;
        kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }

    // QUADPACK-style error estimate: rescale |K - G| by the variation of f
    // around its mean so rough cells are not underestimated.
    const Complex mean = kronrod * 0.5;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    resasc *= std::abs(h);

    kronrod *= h;
    gauss *= h;

    double err = std::abs(kronrod - gauss);
    if (resasc != 0.0 && err != 0.0) {
        const double scaled = std::pow(200.0 * err / resasc, 1.5);
        err = resasc * (scaled < 1.0 ? scaled : 1.0);
    }
    return Cell{a, b, kronrod, err, seq};
}

} // namespace

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    long seq = 0;
    std::priority_queue<Cell, std::vector<Cell>, CellLess> cells;
    Cell first = gk15(f, a, b, seq++, out.n_evals);
    Complex total = first.value;
    double total_err = first.error;
    cells.push(first);

    while (static_cast<int>(cells.size()) < spec.max_intervals) {
        if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
            out.converged = true;
            break;
        }
        Cell worst = cells.top();
        cells.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval exhausted at machine resolution; stop refining it
            total_err -= worst.error;
            worst.error = 0.0;
            cells.push(worst);
            continue;
        }
        Cell left = gk15(f, worst.a, mid, seq++, out.n_evals);
        Cell right = gk15(f, mid, worst.b, seq++, out.n_evals);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        cells.push(left);
        cells.push(right);
    }
    if (!out.converged)
        out.converged = total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));

    out.value = total;
    out.est_error = std::max(total_err, 0.0);
    return out;
}

QuadResult integrate_halfline(const Integrand& f, const QuadratureSpec& spec, double scale) {
    if (!(scale > 0.0)) throw std::domain_error("integrate_halfline: scale must be > 0");
    const double s = scale;
    Integrand folded = [&f, s](double u) {
        return s * f(s * u) + (s / (u * u)) * f(s / u);
    };
    return integrate_interval(folded, 0.0, 1.0, spec);
}

} // namespace qsu2

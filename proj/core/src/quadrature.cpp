#include "kepler/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "kepler/errors.hpp"

namespace kepler {

namespace {

// 15-point Kronrod abscissae on [-1,1] (odd indices form the 7-point Gauss rule)
const double XGK[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

const double WGK[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

const double WG[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        double fx = f(c + h * XGK[i]);
        kronrod += WGK[i] * fx;
        if (i % 2 == 1) gauss += WG[i / 2] * fx;
    }
    kronrod *= h;
    gauss *= h;
    double err = std::pow(200.0 * std::fabs(kronrod - gauss), 1.5);
    return Interval{a, b, kronrod, std::min(err, std::fabs(kronrod - gauss) * 200.0)};
}

} // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_intervals) {
    std::priority_queue<Interval> heap;
    heap.push(evaluate(f, a, b));
    double total = heap.top().value;
    double err = heap.top().error;
    int count = 1;
    while (err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (count >= max_intervals)
            throw accuracy_error("integrate_gk: interval budget exhausted", err);
        Interval worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Interval left = evaluate(f, worst.a, mid);
        Interval right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    return QuadResult{total, err, count};
}

QuadResult integrate_gk_half_line(const std::function<double(double)>& f, double a,
                                  double abs_tol, double rel_tol, int max_intervals) {
    auto g = [&f, a](double u) {
        double one_minus = 1.0 - u;
        double x = a + u / one_minus;
        double jac = 1.0 / (one_minus * one_minus);
        double fx = f(x);
        return std::isfinite(fx) ? fx * jac : 0.0;
    };
    return integrate_gk(g, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

} // namespace kepler

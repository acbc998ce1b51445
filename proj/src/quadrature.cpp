#include "phonsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "phonsim/errors.hpp"

namespace phonsim::quad {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] (positive half; node 0 included).
// The embedded 7-point Gauss rule uses every other Kronrod node.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xgk[i]);
        fv[14 - i] = f(c + h * xgk[i]);
    }
    fv[7] = f(c);
    double resk = wgk[7] * fv[7];
    double resg = wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += wgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    double diff = std::abs(resk - resg) * h;
    // quadpack-style sharpened error estimate
    p.err = diff;
    if (diff > 0.0) {
        double resabs = 0.0;
        for (int i = 0; i < 7; ++i) resabs += wgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        resabs += wgk[7] * std::abs(fv[7]);
        resabs *= std::abs(h);
        if (resabs > 0.0) p.err = resabs * std::min(1.0, std::pow(200.0 * diff / resabs, 1.5));
        p.err = std::max(p.err, diff * 1e-14);
    }
    return p;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_intervals) {
    Result out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double toterr = first.err;
    heap.push(first);
    while (static_cast<int>(heap.size()) < max_intervals) {
        double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (toterr <= tol) break;
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval at machine resolution
            heap.push(worst);
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    out.value = total;
    out.error_estimate = toterr;
    out.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total));
    return out;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_intervals,
                          const char* label) {
    Result r = integrate(f, a, b, abs_tol, rel_tol, max_intervals);
    if (!r.converged) {
        throw NumericalError(std::string("quadrature did not converge for ") + label +
                             ": estimated error " + std::to_string(r.error_estimate) +
                             " after " + std::to_string(r.evaluations) + " evaluations");
    }
    return r.value;
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double abs_tol, double rel_tol,
                                       int max_intervals, const char* label) {
    double re = integrate_or_throw([&](double x) { return f(x).real(); }, a, b, abs_tol,
                                   rel_tol, max_intervals, label);
    double im = integrate_or_throw([&](double x) { return f(x).imag(); }, a, b, abs_tol,
                                   rel_tol, max_intervals, label);
    return {re, im};
}

}  // namespace phonsim::quad

#include "phonsim/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace phonsim::num {

void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

template <typename T>
std::vector<T> cumulative_impl(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    std::vector<T> out(n, T{});
    if (n < 2) return out;
    if (n < 4) {  // fall back to trapezoid for tiny tables
        for (std::size_t k = 1; k < n; ++k) out[k] = out[k - 1] + (f[k - 1] + f[k]) * (h / 2.0);
        return out;
    }
    // cell [k, k+1] from the cubic through the nearest four samples
    auto cell = [&](std::size_t k) -> T {
        if (k == 0) return (f[0] * 9.0 + f[1] * 19.0 - f[2] * 5.0 + f[3]) * (h / 24.0);
        if (k == n - 2)
            return (f[n - 1] * 9.0 + f[n - 2] * 19.0 - f[n - 3] * 5.0 + f[n - 4]) * (h / 24.0);
        return (-f[k - 1] + f[k] * 13.0 + f[k + 1] * 13.0 - f[k + 2]) * (h / 24.0);
    };
    for (std::size_t k = 0; k + 1 < n; ++k) out[k + 1] = out[k] + cell(k);
    return out;
}

}  // namespace

std::vector<cplx> cumulative_integral(const std::vector<cplx>& f, double h) {
    return cumulative_impl(f, h);
}
std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
    return cumulative_impl(f, h);
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return s;
}

double interp_cubic_uniform(const std::vector<double>& y, double x0, double h, double x) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
    double u = (x - x0) / h;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::floor(u));
    if (i < 1) i = 1;
    if (i > n - 3) i = n - 3;
    const double t = u - static_cast<double>(i);
    const double ym1 = y[i - 1], y0 = y[i], y1 = y[i + 1], y2 = y[i + 2];
    // Catmull-Rom
    return y0 + 0.5 * t * (y1 - ym1 + t * (2.0 * ym1 - 5.0 * y0 + 4.0 * y1 - y2 +
                                           t * (3.0 * (y0 - y1) + y2 - ym1)));
}

namespace {
// 32-point Gauss-Legendre on [-1, 1], positive nodes (symmetric).
constexpr double gl32_x[16] = {
    0.048307665687738316235, 0.144471961582796493485, 0.239287362252137074545,
    0.331868602282127649780, 0.421351276130635345364, 0.506899908932229390024,
    0.587715757240762329041, 0.663044266930215200975, 0.732182118740289680387,
    0.794483795967942406963, 0.849367613732569970134, 0.896321155766052123965,
    0.934906075937739689171, 0.964762255587506430774, 0.985611511545268335400,
    0.997263861849481563545};
constexpr double gl32_w[16] = {
    0.096540088514727800567, 0.095638720079274859419, 0.093844399080804565639,
    0.091173878695763884713, 0.087652093004403811143, 0.083311924226946755222,
    0.078193895787070306472, 0.072345794108848506225, 0.065822222776361846838,
    0.058684093478535547145, 0.050998059262376176196, 0.042835898022226680657,
    0.034273862913021433103, 0.025392065309262059456, 0.016274394730905670605,
    0.007018610009470096600};
}  // namespace

PanelGrid composite_gauss_legendre(double a, double b, double panel_width) {
    PanelGrid g;
    if (b <= a) return g;
    const int npanels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
    const double w = (b - a) / npanels;
    g.nodes.reserve(static_cast<std::size_t>(npanels) * 32);
    g.weights.reserve(static_cast<std::size_t>(npanels) * 32);
    for (int p = 0; p < npanels; ++p) {
        const double c = a + (p + 0.5) * w;
        const double h = 0.5 * w;
        for (int i = 15; i >= 0; --i) {
            g.nodes.push_back(c - h * gl32_x[i]);
            g.weights.push_back(h * gl32_w[i]);
        }
        for (int i = 0; i < 16; ++i) {
            g.nodes.push_back(c + h * gl32_x[i]);
            g.weights.push_back(h * gl32_w[i]);
        }
    }
    return g;
}

}  // namespace phonsim::num

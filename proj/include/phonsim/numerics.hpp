#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace phonsim::num {

using cplx = std::complex<double>;

// In-place radix-2 complex FFT, sign = -1 for forward (e^{-i w t}).
// n must be a power of two.
void fft_pow2(std::vector<cplx>& a, int sign);

std::size_t next_pow2(std::size_t n);

// Cumulative integral of samples f(x_0 + k h), k = 0..n-1, returned at the
// same nodes (out[0] = 0). Fourth-order: cubic through the four nearest
// samples per cell, one-sided at the ends.
std::vector<cplx> cumulative_integral(const std::vector<cplx>& f, double h);
std::vector<double> cumulative_integral(const std::vector<double>& f, double h);

// Trapezoidal integral of tabulated samples on an arbitrary ordered grid.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

// Catmull-Rom interpolation of uniformly sampled values at x = x0 + k h.
double interp_cubic_uniform(const std::vector<double>& y, double x0, double h, double x);

// Composite Gauss-Legendre nodes/weights over [a, b] with a fixed panel
// width; 32 nodes per panel. Suitable for oscillatory cosine/sine
// transforms when panel_width * t_max stays below ~60 radians.
struct PanelGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
};
PanelGrid composite_gauss_legendre(double a, double b, double panel_width);

}  // namespace phonsim::num

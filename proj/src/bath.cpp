#include "phonsim/bath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phonsim/errors.hpp"
#include "phonsim/numerics.hpp"
#include "phonsim/quadrature.hpp"
#include "phonsim/units.hpp"

namespace phonsim::bath {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

SpectralDensity::SpectralDensity(double alpha_, double omega_c_, int z_)
    : alpha(alpha_), omega_c(omega_c_), z(z_) {
    if (!(alpha >= 0.0)) throw DomainError("SpectralDensity: alpha must be >= 0");
    if (!(omega_c > 0.0)) throw DomainError("SpectralDensity: omega_c must be > 0");
    if (z != 2 && z != 3) throw DomainError("SpectralDensity: z must be 2 or 3");
}

BathTemperature::BathTemperature(double T) : kelvin(T) {
    if (!(T >= 0.0)) throw DomainError("BathTemperature: T must be >= 0");
}

double BathTemperature::hbar_beta() const {
    if (kelvin <= 0.0) throw DomainError("hbar_beta undefined at T = 0");
    return 1.0 / (units::kB_over_hbar * kelvin);
}

double j_omega(const SpectralDensity& sd, double omega) {
    if (omega < 0.0) throw DomainError("j_omega: omega must be >= 0");
    if (omega == 0.0) return 0.0;
    return sd.alpha * std::pow(omega, sd.z) * std::exp(-omega * omega / (sd.omega_c * sd.omega_c));
}

double huang_rhys(const SpectralDensity& sd) {
    return sd.z == 2 ? 0.5 * kSqrtPi * sd.omega_c * sd.alpha
                     : 0.5 * sd.omega_c * sd.omega_c * sd.alpha;
}

double huang_rhys_quadrature(const SpectralDensity& sd) {
    return quad::integrate_or_throw(
        [&](double w) { return w > 0.0 ? j_omega(sd, w) / (w * w) : 0.0; }, 0.0,
        8.0 * sd.omega_c, 1e-13, 1e-12, 4000, "Huang-Rhys integrand");
}

double polaron_shift(const SpectralDensity& sd) {
    const double wc = sd.omega_c;
    return sd.z == 2 ? 0.5 * sd.alpha * wc * wc : 0.25 * kSqrtPi * sd.alpha * wc * wc * wc;
}

double polaron_shift_quadrature(const SpectralDensity& sd) {
    return quad::integrate_or_throw(
        [&](double w) { return w > 0.0 ? j_omega(sd, w) / w : 0.0; }, 0.0, 8.0 * sd.omega_c,
        1e-13, 1e-12, 4000, "polaron shift integrand");
}

namespace {

// coth(hbar beta w / 2), with the T = 0 limit handled analytically.
struct Thermal {
    bool zero;
    double q = 0.0;  // hbar beta / 2

    Thermal(const BathTemperature& T)
        : zero(T.is_zero()), q(T.is_zero() ? 0.0 : 0.5 * T.hbar_beta()) {}

    double coth(double w) const {
        if (zero) return 1.0;
        return 1.0 / std::tanh(q * w);
    }
};

}  // namespace

double re_phi_infinity(const SpectralDensity& sd, const BathTemperature& T) {
    if (sd.z != 3)
        throw DimensionalityError("Re Phi(inf) finite only for z = 3 (2D weight diverges)");
    Thermal th(T);
    auto f = [&](double w) {
        if (w <= 0.0) return th.zero ? 0.0 : sd.alpha * 2.0 / T.hbar_beta();
        return sd.alpha * w * std::exp(-w * w / (sd.omega_c * sd.omega_c)) * th.coth(w);
    };
    return -quad::integrate_or_throw(f, 0.0, 8.0 * sd.omega_c, 1e-13, 1e-12, 4000,
                                     "ZPL weight integrand");
}

double franck_condon(const SpectralDensity& sd, const BathTemperature& T) {
    return std::exp(0.5 * re_phi_infinity(sd, T));
}

double area_density_wse2(double lattice_const_nm) {
    if (!(lattice_const_nm > 0.0)) throw DomainError("lattice constant must be > 0");
    constexpr double m_W = 183.84;    // amu
    constexpr double m_Se = 78.971;   // amu
    const double a_cell = 0.5 * std::sqrt(3.0) * lattice_const_nm * lattice_const_nm;
    return (m_W + 2.0 * m_Se) / a_cell;  // amu/nm^2
}

double alpha_from_material(const MaterialParams& m, int z) {
    if (z != 2 && z != 3) throw DomainError("alpha_from_material: z must be 2 or 3");
    if (!(m.sound_speed_nm_per_ps > 0.0)) throw DomainError("sound speed must be > 0");
    const double dD = (m.D_e_eV - m.D_h_eV) * units::eV_SI;  // J
    const double c = m.sound_speed_nm_per_ps * 1e3;          // m/s
    if (z == 2) {
        if (!m.rho_area_amu_per_nm2)
            throw ConfigError("alpha_from_material: area density required for z = 2");
        const double rho = *m.rho_area_amu_per_nm2 * units::amu_SI / 1e-18;  // kg/m^2
        const double alpha_s = dD * dD / (4.0 * kPi * units::hbar_SI * rho * std::pow(c, 4));
        return alpha_s * 1e12;  // ps
    }
    if (!m.rho_volume_amu_per_nm3)
        throw ConfigError("alpha_from_material: volume density required for z = 3");
    const double rho = *m.rho_volume_amu_per_nm3 * units::amu_SI / 1e-27;  // kg/m^3
    const double alpha_s2 = dD * dD / (4.0 * kPi * kPi * units::hbar_SI * rho * std::pow(c, 5));
    return alpha_s2 * 1e24;  // ps^2
}

double confinement_radius(const SpectralDensity& sd, double sound_speed_nm_per_ps) {
    return std::sqrt(2.0) * sound_speed_nm_per_ps / sd.omega_c;
}

cplx phi(const SpectralDensity& sd, const BathTemperature& T, double t) {
    if (t < 0.0) throw DomainError("phi: t must be >= 0");
    if (t == 0.0) return {0.0, 0.0};
    Thermal th(T);
    const double wc2 = sd.omega_c * sd.omega_c;
    auto base = [&](double w) {  // J(w)/w^2
        return sd.alpha * std::pow(w, sd.z - 2) * std::exp(-w * w / wc2);
    };
    auto fre = [&](double w) {
        if (w <= 0.0) return 0.0;
        double tanh_term = th.zero ? 1.0 : std::tanh(th.q * w);
        return base(w) * (std::cos(w * t) - 1.0) / tanh_term;
    };
    auto fim = [&](double w) {
        if (w <= 0.0) return 0.0;
        return base(w) * std::sin(w * t);
    };
    const double upper = 8.0 * sd.omega_c;
    // oscillatory: allow the panel budget to grow with w*t
    const int maxiv = std::max(4000, static_cast<int>(upper * t / 2.0) + 200);
    double re = quad::integrate_or_throw(fre, 0.0, upper, 1e-12, 1e-10, maxiv, "Re Phi");
    double im = quad::integrate_or_throw(fim, 0.0, upper, 1e-12, 1e-10, maxiv, "Im Phi");
    return {re, -im};
}

cplx bath_correlation(const SpectralDensity& sd, const BathTemperature& T, double t) {
    if (t < 0.0) throw DomainError("bath_correlation: t must be >= 0");
    Thermal th(T);
    auto fre = [&](double w) {
        if (w <= 0.0) return 0.0;
        return j_omega(sd, w) * th.coth(w) * std::cos(w * t);
    };
    auto fim = [&](double w) {
        if (w <= 0.0) return 0.0;
        return j_omega(sd, w) * std::sin(w * t);
    };
    const double upper = 8.0 * sd.omega_c;
    const int maxiv = std::max(4000, static_cast<int>(upper * t / 2.0) + 200);
    double re = quad::integrate_or_throw(fre, 0.0, upper, 1e-12, 1e-10, maxiv, "Re C");
    double im = quad::integrate_or_throw(fim, 0.0, upper, 1e-12, 1e-10, maxiv, "Im C");
    return {re, -im};
}

namespace {

// Algebraic large-u tails of C(u) for z = 2, from the low-frequency series
// of the transforms' integrands. Terms are a_n / u^n; z = 3 has none.
struct CorrelationTail {
    // pairs (n, coefficient); coefficient complex (real from J coth cosine,
    // imaginary from J sine)
    std::vector<std::pair<int, cplx>> terms;

    CorrelationTail(const SpectralDensity& sd, const BathTemperature& T) {
        if (sd.z != 2) return;
        const double a = sd.alpha;
        const double wc2 = sd.omega_c * sd.omega_c;
        if (!T.is_zero()) {
            const double q = 0.5 * T.hbar_beta();
            const double c1 = a / q;
            const double c3 = a * (q / 3.0 - 1.0 / (q * wc2));
            const double c5 = a * (-q * q * q / 45.0 - q / (3.0 * wc2) + 1.0 / (2.0 * q * wc2 * wc2));
            terms.emplace_back(2, cplx(-c1, 0.0));
            terms.emplace_back(4, cplx(6.0 * c3, 0.0));
            terms.emplace_back(6, cplx(-120.0 * c5, 0.0));
        }
        terms.emplace_back(3, cplx(0.0, 2.0 * a));
        terms.emplace_back(5, cplx(0.0, 24.0 * a / wc2));
        terms.emplace_back(7, cplx(0.0, 360.0 * a / (wc2 * wc2)));
    }

    cplx value(double u) const {
        cplx s = 0.0;
        for (auto& [n, c] : terms) s += c * std::pow(u, -n);
        return s;
    }

    // Int_x^t (t - u) u^{-n} du
    static double psi_kernel(int n, double x, double t) {
        if (n == 2) return t / x - 1.0 - std::log(t / x);
        const double p1 = (std::pow(x, 1 - n) - std::pow(t, 1 - n)) / (n - 1);
        const double p2 = (std::pow(x, 2 - n) - std::pow(t, 2 - n)) / (n - 2);
        return t * p1 - p2;
    }

    cplx psi_contribution(double x, double t) const {
        cplx s = 0.0;
        for (auto& [n, c] : terms) s += c * psi_kernel(n, x, t);
        return s;
    }
};

}  // namespace

PhiTable::PhiTable(const SpectralDensity& sd, const BathTemperature& T, double dt,
                   std::size_t n_steps) {
    if (!(dt > 0.0)) throw DomainError("PhiTable: dt must be > 0");
    const int refine = std::max(1, static_cast<int>(std::ceil(dt / 0.0025)));
    const double du = dt / refine;
    dt_ = dt;

    // correlation support: Gaussian cutoff decay plus the thermal
    // (Matsubara) exponential; the z = 2 algebraic tail is analytic below
    double u_max = 13.0 / sd.omega_c;
    if (!T.is_zero()) u_max = std::max(u_max, 5.3 * T.hbar_beta());
    u_max = std::min(u_max, 80.0);
    const double t_max = dt * static_cast<double>(n_steps);
    u_max = std::min(u_max, std::max(t_max, 2.0 * du));

    const std::size_t nc = static_cast<std::size_t>(std::ceil(u_max / du)) + 1;
    u_max = du * static_cast<double>(nc - 1);

    // C(u) on the u grid from one fixed frequency quadrature
    Thermal th(T);
    const double upper = 9.0 * sd.omega_c;
    double panel = std::min(0.5 * sd.omega_c, 60.0 / std::max(u_max, 1.0));
    if (!T.is_zero()) panel = std::min(panel, 1.0 / th.q);
    num::PanelGrid grid = num::composite_gauss_legendre(0.0, upper, panel);

    std::vector<cplx> C(nc, cplx(0.0, 0.0));
    const std::size_t nq = grid.nodes.size();
    for (std::size_t qi = 0; qi < nq; ++qi) {
        const double w = grid.nodes[qi];
        const double jw = j_omega(sd, w);
        const double fr = grid.weights[qi] * jw * th.coth(w);
        const double fi = grid.weights[qi] * jw;
        const cplx rot(std::cos(w * du), -std::sin(w * du));
        cplx ph(1.0, 0.0);
        for (std::size_t n = 0; n < nc; ++n) {
            C[n] += cplx(fr * ph.real(), fi * ph.imag());
            ph *= rot;
            if ((n & 1023u) == 1023u) ph /= std::abs(ph);
        }
    }

    // prefix integrals P = Int C, Q = Int u C
    std::vector<cplx> uC(nc);
    for (std::size_t n = 0; n < nc; ++n) uC[n] = C[n] * (du * static_cast<double>(n));
    std::vector<cplx> P = num::cumulative_integral(C, du);
    std::vector<cplx> Q = num::cumulative_integral(uC, du);

    const CorrelationTail tail(sd, T);
    const double D = polaron_shift(sd);
    const cplx iD(0.0, D);

    phi_.resize(n_steps + 1);
    phi_[0] = cplx(0.0, 0.0);
    for (std::size_t n = 1; n <= n_steps; ++n) {
        const double t = dt * static_cast<double>(n);
        const std::size_t j = static_cast<std::size_t>(n) * static_cast<std::size_t>(refine);
        cplx psi;
        if (j <= nc - 1) {
            psi = t * P[j] - Q[j];
        } else {
            psi = t * P[nc - 1] - Q[nc - 1] + tail.psi_contribution(u_max, t);
        }
        phi_[n] = -psi - iD * t;
    }
}

}  // namespace phonsim::bath

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace phonsim::bath {

using cplx = std::complex<double>;

// Superohmic spectral density J(w) = alpha w^z exp(-w^2/wc^2).
// alpha carries ps (z=2) or ps^2 (z=3); omega_c in rad/ps.
struct SpectralDensity {
    double alpha = 0.0;
    double omega_c = 1.0;
    int z = 2;

    SpectralDensity() = default;
    SpectralDensity(double alpha_, double omega_c_, int z_);
};

struct BathTemperature {
    double kelvin = 0.0;

    BathTemperature() = default;
    explicit BathTemperature(double T);

    bool is_zero() const { return kelvin == 0.0; }
    // hbar beta = hbar / (kB T), ps. Only valid for T > 0.
    double hbar_beta() const;
};

// Bulk/monolayer material constants feeding alpha and the quadratic-coupling
// dephasing rate. Densities and masses are optional: each consumer checks
// for what it needs and raises ConfigError otherwise.
struct MaterialParams {
    double D_e_eV = 0.0;                  // electron deformation potential
    double D_h_eV = 0.0;                  // hole deformation potential
    double sound_speed_nm_per_ps = 1.0;
    std::optional<double> rho_area_amu_per_nm2;   // z=2
    std::optional<double> rho_volume_amu_per_nm3; // z=3
    std::optional<double> lattice_const_nm;
    std::optional<double> m_e_eff;        // electron-mass units
    std::optional<double> m_h_eff;
};

// J(w); w must be >= 0.
double j_omega(const SpectralDensity& sd, double omega);

// Huang-Rhys factor S = Int J/w^2 dw, closed form.
double huang_rhys(const SpectralDensity& sd);
// Same via adaptive quadrature (agrees with the closed form to 1e-10 rel).
double huang_rhys_quadrature(const SpectralDensity& sd);

// Polaron shift D = Int J/w dw (rad/ps), closed form + quadrature route.
double polaron_shift(const SpectralDensity& sd);
double polaron_shift_quadrature(const SpectralDensity& sd);

// Franck-Condon weight B = exp[-(1/2) Int J/w^2 coth(beta hbar w/2) dw],
// defined for z=3 only (the integral diverges logarithmically in 2D at
// T > 0, and the T=0 marginal case is excluded as well for uniformity).
// The zero-phonon line carries spectral weight B^2; at T=0, B = exp(-S/2).
double franck_condon(const SpectralDensity& sd, const BathTemperature& T);

// Coupling strength from deformation potentials: alpha_2D in ps,
// alpha_3D in ps^2. For z=2 the area density may be derived from the
// lattice constant by the caller; here it must be present.
double alpha_from_material(const MaterialParams& m, int z);

// WSe2 monolayer area density (m_W + 2 m_Se)/A_cell, A_cell = (sqrt(3)/2) a^2.
double area_density_wse2(double lattice_const_nm);

// Confinement radius R = sqrt(2) c / omega_c (nm).
double confinement_radius(const SpectralDensity& sd, double sound_speed_nm_per_ps);

// Phi(t) = Int J/w^2 [ (cos wt - 1)/tanh(beta hbar w/2) - i sin wt ] dw,
// by adaptive quadrature on [0, 8 omega_c]. Reference path; t >= 0.
cplx phi(const SpectralDensity& sd, const BathTemperature& T, double t);

// C(t) = Int J [ coth(beta hbar w/2) cos wt - i sin wt ] dw = -Phi''(t).
cplx bath_correlation(const SpectralDensity& sd, const BathTemperature& T, double t);

// Long-time limit of Re Phi: -Int J/w^2 coth dw = 2 ln B (z=3 only).
double re_phi_infinity(const SpectralDensity& sd, const BathTemperature& T);

// Fast tabulation of Phi on a uniform time grid, built from one bath
// correlation table via Phi(t) = -iDt - Int_0^t (t-u) C(u) du. The C table
// is evaluated on a fixed composite Gauss-Legendre frequency grid; beyond
// the tabulated range the algebraic tail of C (z=2) is integrated in
// closed form. Grid step is an integer refinement of the requested dt.
class PhiTable {
public:
    PhiTable(const SpectralDensity& sd, const BathTemperature& T, double dt,
             std::size_t n_steps);

    cplx operator[](std::size_t n) const { return phi_[n]; }
    std::size_t size() const { return phi_.size(); }
    double dt() const { return dt_; }

private:
    double dt_;
    std::vector<cplx> phi_;
};

}  // namespace phonsim::bath

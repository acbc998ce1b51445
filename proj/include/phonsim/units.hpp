#pragma once

// Unit system used throughout: time in ps, angular frequency in rad/ps,
// length in nm, temperature in K. Energies are expressed as angular
// frequencies (E/hbar). The spectroscopy literature's "THz" axis labels
// are numerically identical to rad/ps in this convention.

namespace phonsim::units {

// CODATA 2018 (exact since the 2019 SI redefinition).
inline constexpr double hbar_SI = 1.054571817e-34;       // J s
inline constexpr double kB_SI = 1.380649e-23;            // J/K
inline constexpr double eV_SI = 1.602176634e-19;         // J
inline constexpr double amu_SI = 1.66053906892e-27;      // kg
inline constexpr double electron_mass_SI = 9.1093837139e-31;  // kg

// k_B / hbar in rad ps^-1 K^-1 (~0.13092).
inline constexpr double kB_over_hbar = kB_SI / hbar_SI * 1e-12;

// Speed of light in nm/ps, for wavelength <-> angular frequency.
inline constexpr double c_light_nm_per_ps = 299792.458;

// 1 eV as an angular frequency in rad/ps.
inline constexpr double eV_to_rad_per_ps = eV_SI / hbar_SI * 1e-12;

// m c^2 / hbar for m = 1 amu, c = 1 nm/ps, in rad/ps. Multiply by the
// mass in amu and the squared speed in (nm/ps)^2.
inline constexpr double amu_speed2_to_rad_per_ps = amu_SI * 1e6 / hbar_SI * 1e-12;

inline constexpr double electron_mass_amu = electron_mass_SI / amu_SI;

// Rate conversion. Rates quoted in "GHz" follow the angular convention
// (1 GHz = 1e9 rad/s = 1e-3 rad/ps), which is the only reading that makes
// the fitted linewidths (0.165-0.773 rad/ps <-> "165-773 GHz") and the
// indistinguishability numbers mutually consistent.
inline constexpr double GHz_to_rad_per_ps = 1e-3;
inline constexpr double rad_per_ps_to_GHz = 1e3;

inline constexpr double ns_to_ps = 1e3;

inline double wavelength_nm_to_omega(double lambda_nm) {
    return 2.0 * 3.14159265358979323846 * c_light_nm_per_ps / lambda_nm;
}

inline double omega_to_wavelength_nm(double omega_rad_per_ps) {
    return 2.0 * 3.14159265358979323846 * c_light_nm_per_ps / omega_rad_per_ps;
}

}  // namespace phonsim::units

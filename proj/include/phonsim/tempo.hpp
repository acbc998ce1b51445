#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "phonsim/bath.hpp"

namespace phonsim::tempo {

using cplx = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

// Driven two-level emitter in the frame rotating at the bare exciton
// frequency; basis {|G>, |X>}. The bath couples through the fixed
// projector n = |X><X|. The evaluator must return a Hermitian matrix.
struct SystemHamiltonian {
    std::function<Matrix2(double)> h;

    Matrix2 at(double t) const;  // checks Hermiticity to 1e-12
};

struct ProcessTensorConfig {
    double dt = 0.05;       // Trotter step (ps)
    int memory_steps = 60;  // K: influence gates reach K cells back
    double svd_tol = 1e-7;  // relative singular-value cutoff
    int max_bond = 128;
    double t_start = 0.0;
    double t_end = 1.0;

    void validate() const;
    int n_steps() const;
};

struct DensityMatrix {
    Matrix2 rho;

    static DensityMatrix ground();
    // trace within 1e-8 of one, Hermitian, eigenvalues >= -1e-8
    void validate() const;
};

// Discrete influence-functional memory kernel: eta[k] is the double
// integral of the bath correlation C over Trotter cells k steps apart,
// evaluated exactly from Phi (psi(t) = -Phi(t) - i D t has psi'' = C):
//   eta[0] = psi(dt),  eta[k] = psi((k+1)dt) - 2 psi(k dt) + psi((k-1)dt).
struct InfluenceCoefficients {
    double dt = 0.0;
    std::vector<cplx> eta;  // size K+1

    int memory_steps() const { return static_cast<int>(eta.size()) - 1; }
};

InfluenceCoefficients eta_coefficients(const bath::SpectralDensity& sd,
                                       const bath::BathTemperature& T, double dt, int K);

// Smallest K such that |C(t)| < rel_tol * |C(0)| for all probed t > K dt.
int required_memory_steps(const bath::SpectralDensity& sd, const bath::BathTemperature& T,
                          double dt, double rel_tol = 1e-6);

struct ConvergenceInfo {
    int max_bond_reached = 0;
    double max_truncation_weight = 0.0;  // discarded sum(s^2)/sum(s^2), worst SVD
    double max_trace_drift = 0.0;
    double max_hermiticity_drift = 0.0;
    double min_eigenvalue = 0.0;
    bool bond_cap_hit = false;
    std::vector<std::string> warnings;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Matrix2> rho;
    ConvergenceInfo info;

    const Matrix2& final_rho() const { return rho.back(); }
    double exciton_population(std::size_t i) const { return rho[i](1, 1).real(); }
    double final_population() const { return rho.back()(1, 1).real(); }
};

// Numerically exact reduced dynamics: the discretized influence functional
// contracted as a matrix-product state, grown one Trotter cell per step and
// bond-truncated at svd_tol/max_bond. Symmetric splitting: exact 2x2
// exponentials of H at the quarter points sandwich the influence gates.
Trajectory propagate(const SystemHamiltonian& H, const bath::SpectralDensity& sd,
                     const bath::BathTemperature& T, const ProcessTensorConfig& cfg,
                     const DensityMatrix& rho0);

// Same, with precomputed influence coefficients (scans share them).
Trajectory propagate(const SystemHamiltonian& H, const InfluenceCoefficients& infl,
                     const ProcessTensorConfig& cfg, const DensityMatrix& rho0);

// Exact path-sum reference: same gates, no compression. The augmented
// tensor holds min(N, K)+1 legs of dimension 4; steps beyond ~12 legs are
// refused. Oracle for propagate().
Trajectory quapi_brute_force(const SystemHamiltonian& H, const InfluenceCoefficients& infl,
                             const ProcessTensorConfig& cfg, const DensityMatrix& rho0);

// Bath-free unitary reference: embedded Dormand-Prince 5(4) integration of
// the von Neumann equation with adaptive substeps, sampled on the cfg grid.
Trajectory closed_system_propagate(const SystemHamiltonian& H, const DensityMatrix& rho0,
                                   double dt, double t_start, double t_end,
                                   double tol = 1e-11);

// Convergence ladder: runs cfg and a refined config (dt/2, svd_tol/10) and
// reports the final-population shift.
struct LadderReport {
    double p_final_base = 0.0;
    double p_final_refined = 0.0;
    double delta() const { return std::abs(p_final_base - p_final_refined); }
};

LadderReport convergence_ladder(const SystemHamiltonian& H, const bath::SpectralDensity& sd,
                                const bath::BathTemperature& T, const ProcessTensorConfig& cfg,
                                const DensityMatrix& rho0);

}  // namespace phonsim::tempo

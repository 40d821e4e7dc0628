#pragma once

#include <array>
#include <complex>
#include <vector>

#include "pdm/grid.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/models.hpp"
#include "pdm/ordering.hpp"

namespace pdm {

/// Canonical: V = (rho^2/2)[Vt(rho) + Vt(z)], the assembly consistent with the
/// separated 1D equations. Tabulated: the literal per-pair composite forms,
/// which differ by constant factors and drop the rho^2 weight on the Samsonov
/// term; kept for side-by-side comparison only.
enum class PotentialAssembly { Canonical, Tabulated };

struct CompositePotential {
    RadialModel radial;
    AxialModel axial;
    PotentialAssembly assembly = PotentialAssembly::Canonical;
};

/// V(rho, z) under the chosen assembly; complex for the PT axial models.
std::complex<double> assemble_potential(const CompositePotential& pot, double rho, double z);

/// Ordering potential W(rho, z) of the factorized-mass kinetic expansion:
/// 2MW = zeta[(g'/g)^2 + (f'/f)^2/rho^2 + (k'/k)^2]
///       - (beta+1)[g'/(rho g) + g''/g + f''/(f rho^2) + k''/k],
/// returned as W = (2MW)/(2M). Closed form for the canonical rho^-2 profile,
/// central differences (step 1e-5) otherwise; azimuthal factor evaluated at
/// phi = 0.
double ordering_potential_w(const MassProfile& mass, const AmbiguityOrdering& ordering,
                            double rho, double z);

/// Psi(rho_i, z_j) at fixed azimuthal mode m; Dirichlet-padded on all sides.
struct GridField {
    GridField(Discretization rho, Discretization z, int m);

    Discretization rho;
    Discretization z;
    int m;
    std::vector<std::complex<double>> values; // row-major [i * z.n_points + j]

    std::complex<double>& at(int i, int j) { return values[idx(i, j)]; }
    const std::complex<double>& at(int i, int j) const { return values[idx(i, j)]; }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(z.n_points)
               + static_cast<std::size_t>(j);
    }
};

/// Applies the mass-weighted eigenvalue form of the separable PDM operator:
/// out = [d_rho^2 + (1/rho - g'/g) d_rho - m^2/rho^2 + d_z^2 - (k'/k) d_z] Psi
///       - 2 M V Psi + M W Psi,
/// so out = -2 M E Psi for an exact eigenpair. Second-order stencils, exact
/// azimuthal mode reduction, azimuthally uniform mass required.
GridField apply_pdm_hamiltonian(const GridField& field, const CompositePotential& pot,
                                const MassProfile& mass, const AmbiguityOrdering& ordering);

/// || apply(Psi) + 2 M E Psi ||_2 / || 2 M Psi ||_2 over interior nodes.
double residual_norm(const GridField& field, std::complex<double> energy,
                     const CompositePotential& pot, const MassProfile& mass,
                     const AmbiguityOrdering& ordering);

/// Radial factor R(rho_i) for recombined eigenfunctions: the eigenvector of
/// the discrete operator the 2D stencils apply along rho (convective form,
/// symmetrized by a diagonal similarity), with K_phi^2 = 1 - ell^2. Using the
/// same stencil family on both sides keeps the recombination discretely
/// consistent; the returned eigenvalue approximates -K_z^2.
struct RadialFactor {
    double eigenvalue;
    std::vector<double> values;
};

RadialFactor radial_factor(const RadialModel& model, double ell, int n_rho,
                           const Discretization& disc);

/// Recombined-eigenfunction convergence study for the Coulomb x well
/// composite: the radial factor is the oracle eigenvector, the axial factor
/// the exact sine, the energy the separation-consistent closed form. Residuals
/// over three jointly halved grids must fall by ~4x each refinement.
struct CompositeVerification {
    double L = 0.0;
    int n_z = 1;
    int n_rho = 0;
    int m = 0;
    double ell = 0.0;
    double energy = 0.0;
    std::array<double, 3> residuals{};
    std::array<double, 2> ratios{};
    std::array<int, 3> rho_points{};
    std::array<int, 3> z_points{};
    double rho_max = 0.0;

    bool pass() const {
        for (double r : ratios) {
            if (!(r >= 3.6 && r <= 4.4)) return false;
        }
        return true;
    }
};

/// The default geometry (L = 3.5 pi, n_z = 1) selects the implied ell = 3
/// state, whose radial factor rho^2 e^(-2 rho/7) keeps every weighted norm
/// regular at the axis. States with implied ell <= 5/2 are rejected.
CompositeVerification verify_composite_coulomb_well(const AmbiguityOrdering& ordering,
                                                    double L = 10.995574287564276,
                                                    int n_z = 1, int n_rho = 0, int m = 0,
                                                    int base_rho_points = 900,
                                                    int base_z_points = 120,
                                                    double rho_max = 80.0);

} // namespace pdm

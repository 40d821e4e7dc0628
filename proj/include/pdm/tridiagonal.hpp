#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "pdm/grid.hpp"
#include "pdm/models.hpp"

namespace pdm {

/// Symmetric tridiagonal matrix: second-order central stencil for -d^2/dx^2
/// plus a (possibly complex) diagonal potential. Off-diagonal entries are
/// placed symmetrically, so complex potentials give a complex-symmetric
/// (not Hermitian) operator.
struct TridiagonalOperator {
    std::vector<std::complex<double>> diag; // length N
    std::vector<std::complex<double>> off;  // length N-1
    bool real_symmetric = false;

    std::size_t size() const { return diag.size(); }

    /// max_i (|d_i| + |e_{i-1}| + |e_i|), moduli for complex entries.
    double gershgorin_radius() const;

    /// Real-case interval [min(d - r), max(d + r)] containing the spectrum.
    std::pair<double, double> gershgorin_interval() const;
};

/// Builds the stencil 2/h^2 + V(x_i) on the diagonal, -1/h^2 off-diagonal.
TridiagonalOperator assemble_tridiagonal(const Discretization& disc,
                                         const std::function<std::complex<double>(double)>& potential);

/// Radial equation: -U'' + [(ell^2 - 1/4)/rho^2 + Vt(rho)] U = -K_z^2 U.
/// Eigenvalues approximate -K_z^2. Requires x_min > 0.
TridiagonalOperator discretize_radial(const RadialModel& model, double ell,
                                      const Discretization& disc);

/// Axial equation: -Z'' + Vt(z) Z = K_z^2 Z. Eigenvalues approximate K_z^2.
/// Samsonov and the infinite well pin their own domains ([-pi, pi] and [0, L]);
/// a mismatched grid raises DomainMismatch. `form` picks the printed or the
/// oracle-confirmed Samsonov potential.
TridiagonalOperator discretize_axial(const AxialModel& model, const Discretization& disc,
                                     PotentialForm form = PotentialForm::TrueModel);

/// Default truncation boxes: well [0, L], Morse [-2.5/eps, 30/eps],
/// Scarf II [-20, 20], Samsonov [-pi, pi].
Discretization default_axial_disc(const AxialModel& model, int n_points);

} // namespace pdm

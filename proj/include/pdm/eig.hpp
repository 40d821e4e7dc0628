#pragma once

#include <complex>
#include <vector>

#include "pdm/tridiagonal.hpp"

namespace pdm {

/// Number of eigenvalues strictly below x (Sturm count via the LDL^T pivot
/// recurrence). Real symmetric operators only.
int sturm_count_below(const TridiagonalOperator& op, double x);

/// k smallest eigenvalues of a real symmetric tridiagonal operator, ascending,
/// each bracketed by bisection to absolute width <= 1e-10 * max(1, Gershgorin
/// radius). Deterministic.
std::vector<double> eig_sym_tridiag(const TridiagonalOperator& op, int k);

/// k eigenvalues of smallest real part of a complex symmetric tridiagonal
/// operator, sorted by real part (then imaginary part). Shifted QL sweeps with
/// complex orthogonal rotations; the tridiagonal input is the Hessenberg form,
/// so this is the shifted Hessenberg QR specialized to bandwidth one. Throws
/// NonConvergence (with the partial spectrum) after 30 sweeps per eigenvalue.
std::vector<std::complex<double>> eig_complex(const TridiagonalOperator& op, int k);

struct EigenPair {
    std::complex<double> value; // Rayleigh-quotient refinement of the estimate
    std::vector<std::complex<double>> vector; // normalized, ||v||_2 = 1
    double residual; // ||T v - value * v|| / ||v||
};

/// Inverse iteration for the eigenvector belonging to an eigenvalue estimate;
/// works for real symmetric and complex symmetric operators alike.
EigenPair inverse_iteration(const TridiagonalOperator& op, std::complex<double> lambda);

} // namespace pdm

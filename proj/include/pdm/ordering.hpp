#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdm {

/// Von Roos ambiguity parameters (alpha, beta, gamma) with the constraint
/// alpha + beta + gamma = -1 enforced at construction (tolerance 1e-12).
class AmbiguityOrdering {
public:
    AmbiguityOrdering(double alpha, double beta, double gamma);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    /// zeta = alpha(alpha-1) + gamma(gamma-1) - beta(beta+1)
    double zeta() const;

    /// zeta - beta: the only combination through which the ordering enters
    /// the closed-form energies (a constant additive shift).
    double shift() const { return zeta() - beta_; }

private:
    double alpha_;
    double beta_;
    double gamma_;
};

struct NamedOrdering {
    std::string name;
    AmbiguityOrdering ordering;
};

/// The five classic parameter sets: Gora-Williams, BenDaniel-Duke,
/// Zhu-Kroemer, Li-Kuhn, Mustafa-Mazharimousavi.
const std::vector<NamedOrdering>& preset_orderings();

/// Case-insensitive preset lookup; spaces, hyphens and dashes are ignored,
/// so "BenDaniel-Duke", "ben daniel duke" and "bendanielduke" all match.
std::optional<AmbiguityOrdering> find_preset(std::string_view name);

/// K_phi^2 = 2E + 2(zeta - beta - 1) - m^2
double kphi2_from_energy(double energy, int m, const AmbiguityOrdering& ordering);

/// Principal square root of 1 - K_phi^2: real and >= 0 for K_phi^2 <= 1,
/// otherwise i*sqrt(K_phi^2 - 1).
std::complex<double> ell_from_kphi2(double kphi2);

/// Separation constants of one quantum state.
struct SeparationConstants {
    double kphi2;
    std::complex<double> ell;
    std::complex<double> kz2;
};

SeparationConstants make_separation(double energy, int m, const AmbiguityOrdering& ordering,
                                    std::complex<double> kz2);

/// Quantum-number labels (n_rho, m, n_z). Admissible n_z ranges are
/// model-specific; see axial_nz_start().
struct QuantumNumbers {
    int n_rho = 0;
    int m = 0;
    int n_z = 0;
};

} // namespace pdm

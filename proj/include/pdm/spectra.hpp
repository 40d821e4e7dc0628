#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pdm/models.hpp"
#include "pdm/ordering.hpp"

namespace pdm {

/// Paper reproduces the printed formulas verbatim; Standard substitutes the
/// textbook solution of the same 1D equation where the two disagree (Morse
/// K_z^2 and the Coulomb quantization offset).
enum class FormulaVariant { Paper, Standard };

std::string variant_name(FormulaVariant variant);

enum class LevelFlag : unsigned {
    Real = 1u << 0,
    ComplexPair = 1u << 1,
    NonnormalizableSuspect = 1u << 2,
    PaperVariant = 1u << 3,
    StandardVariant = 1u << 4,
};

std::vector<std::string> flag_names(unsigned flags);

struct EnergyLevel {
    std::complex<double> value;
    QuantumNumbers labels;
    std::complex<double> kz2;
    std::complex<double> ell; // the ell implied by the radial quantization
    unsigned flags = 0;

    bool has(LevelFlag f) const { return (flags & static_cast<unsigned>(f)) != 0; }
    void set(LevelFlag f) { flags |= static_cast<unsigned>(f); }
};

/// K_z = n_z pi / L for the well, n_z = 1, 2, 3, ...
double kz_well(int n_z, double L);

/// Morse K_z^2. Paper: sqrt(D)/eps - n_z - 1/2 as printed.
/// Standard: -(sqrt(D) - (n_z + 1/2) eps)^2, the bound-state energy of
/// -Z'' + Vt Z = K_z^2 Z. Both require sqrt(D)/eps - n_z - 1/2 > 0.
double kz2_morse(double D, double epsilon, int n_z, FormulaVariant variant);

/// Scarf II: -(n_z + (1-A)/2)^2 for A >= 2 with n_z < (A-1)/2; -1/4 for A < 2.
double kz2_scarf2(double A, int n_z);

/// Samsonov: n_z^2 / 4 for n_z = 1, 3, 4, ...; n_z = 2 is the missing state.
double kz2_samsonov(int n_z);

/// Dispatch to the matching axial K_z^2 formula.
std::complex<double> axial_kz2(const AxialModel& model, int n_z, FormulaVariant variant);

/// Coulomb energy: E = (m^2+3)/2 - (zeta-beta) - (1/K_z - n_rho - offset)^2 / 2
/// with K_z the principal square root of kz2. Paper offset 1 (as printed);
/// Standard offset 1/2 (consistent with the centrifugal strength ell^2 - 1/4).
EnergyLevel energy_coulomb(int m, int n_rho, std::complex<double> kz2,
                           const AmbiguityOrdering& ordering,
                           FormulaVariant variant = FormulaVariant::Paper);

/// Oscillator energy: E = (m^2+3)/2 - (zeta-beta) - (kz2/a + 2 n_rho + 1)^2 / 2.
EnergyLevel energy_oscillator(int m, int n_rho, std::complex<double> kz2, double a,
                              const AmbiguityOrdering& ordering);

/// Coulomb quantization K_z^2 in terms of a real ell >= 0:
/// Paper (n_rho + ell + 1)^-2, Standard (n_rho + ell + 1/2)^-2.
double kz2_coulomb_internal(double ell, int n_rho, FormulaVariant variant);

struct SkippedState {
    QuantumNumbers labels;
    std::string reason;
};

struct QuantumNumberRanges {
    int n_rho_max = 0; // n_rho = 0 .. n_rho_max
    int m_max = 0;     // m = -m_max .. m_max
    int n_z_max = 1;   // n_z = model start .. n_z_max
};

struct SpectrumTable {
    std::vector<EnergyLevel> levels;
    std::vector<SkippedState> skipped;
};

/// Enumerates all (n_rho, m, n_z) in range; inadmissible axial states are
/// skipped with a structured reason. Complex levels appear together with
/// their conjugate partner (the other K_z branch), both flagged ComplexPair.
/// Output sorted by Re(E), then n_rho, m, n_z, Im(E).
SpectrumTable spectrum_table(const RadialModel& radial, const AxialModel& axial,
                             const AmbiguityOrdering& ordering,
                             const QuantumNumberRanges& ranges, FormulaVariant variant);

} // namespace pdm

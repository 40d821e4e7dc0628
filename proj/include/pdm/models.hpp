#pragma once

#include <complex>
#include <string>
#include <variant>

namespace pdm {

// Radial catalog: Vt(rho) = -2/rho (Coulombic) or a^2 rho^2 / 4 (oscillator).

struct CoulombRadial {};

struct OscillatorRadial {
    explicit OscillatorRadial(double a);
    double a;
};

using RadialModel = std::variant<CoulombRadial, OscillatorRadial>;

double radial_potential(const RadialModel& model, double rho);
std::string radial_name(const RadialModel& model);

// Axial catalog: infinite well on [0, L], Morse, PT-symmetric Scarf II,
// PT-symmetric Samsonov on [-pi, pi].

struct InfiniteWellAxial {
    explicit InfiniteWellAxial(double L);
    double L;
};

struct MorseAxial {
    MorseAxial(double D, double epsilon);
    double D;
    double epsilon;
};

struct ScarfIIAxial {
    explicit ScarfIIAxial(double A);
    double A;
};

struct SamsonovAxial {};

using AxialModel = std::variant<InfiniteWellAxial, MorseAxial, ScarfIIAxial, SamsonovAxial>;

/// How to evaluate a formula that the numeric oracle contradicts: AsPrinted
/// keeps the literal form, TrueModel the form whose spectrum the oracle
/// confirms. They differ only for the Samsonov potential: the printed
/// -1/(cos z + 2i sin z) does not have the n^2/4 spectrum; the Darboux
/// partner of the free well that deletes exactly the n = 2 level is
/// -6/(cos z + 2i sin z)^2, and that is what the eigenvalue claims describe.
enum class PotentialForm { AsPrinted, TrueModel };

/// Vt(z); complex for the PT-symmetric models, zero-imaginary otherwise.
/// The well contributes 0 inside (0, L); its walls live in the grid domain.
std::complex<double> axial_potential(const AxialModel& model, double z,
                                     PotentialForm form = PotentialForm::TrueModel);

std::string axial_name(const AxialModel& model);

/// First admissible n_z: 1 for the well and Samsonov, 0 for Morse and Scarf II.
int axial_nz_start(const AxialModel& model);

} // namespace pdm

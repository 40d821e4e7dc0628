#include "pdm/models.hpp"

#include <cmath>
#include <stdexcept>

namespace pdm {

OscillatorRadial::OscillatorRadial(double a_) : a(a_) {
    if (!(a > 0.0)) throw std::invalid_argument("oscillator requires a > 0");
}

InfiniteWellAxial::InfiniteWellAxial(double L_) : L(L_) {
    if (!(L > 0.0)) throw std::invalid_argument("infinite well requires L > 0");
}

MorseAxial::MorseAxial(double D_, double epsilon_) : D(D_), epsilon(epsilon_) {
    if (!(D > 0.0)) throw std::invalid_argument("Morse requires D > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("Morse requires epsilon > 0");
}

ScarfIIAxial::ScarfIIAxial(double A_) : A(A_) {
    if (!(A > 0.0)) throw std::invalid_argument("Scarf II requires A > 0");
}

double radial_potential(const RadialModel& model, double rho) {
    return std::visit(
        [rho](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, CoulombRadial>) {
                return -2.0 / rho;
            } else {
                return 0.25 * m.a * m.a * rho * rho;
            }
        },
        model);
}

std::string radial_name(const RadialModel& model) {
    return std::holds_alternative<CoulombRadial>(model) ? "coulomb" : "oscillator";
}

std::complex<double> axial_potential(const AxialModel& model, double z, PotentialForm form) {
    return std::visit(
        [z, form](const auto& m) -> std::complex<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InfiniteWellAxial>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, MorseAxial>) {
                return m.D * (std::exp(-2.0 * m.epsilon * z) - 2.0 * std::exp(-m.epsilon * z));
            } else if constexpr (std::is_same_v<T, ScarfIIAxial>) {
                const double c = std::cosh(z);
                const double re = -(3.0 + m.A * m.A) / (4.0 * c * c);
                const double im = -m.A * std::sinh(z) / (c * c);
                return {re, im};
            } else {
                const std::complex<double> u(std::cos(z), 2.0 * std::sin(z));
                if (form == PotentialForm::AsPrinted) return -1.0 / u;
                return -6.0 / (u * u);
            }
        },
        model);
}

std::string axial_name(const AxialModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InfiniteWellAxial>) return "well";
            else if constexpr (std::is_same_v<T, MorseAxial>) return "morse";
            else if constexpr (std::is_same_v<T, ScarfIIAxial>) return "scarf2";
            else return "samsonov";
        },
        model);
}

int axial_nz_start(const AxialModel& model) {
    return std::visit(
        [](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InfiniteWellAxial>) return 1;
            else if constexpr (std::is_same_v<T, SamsonovAxial>) return 1;
            else return 0;
        },
        model);
}

} // namespace pdm

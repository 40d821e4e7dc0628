#include "pdm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

constexpr double kImagTol = 0.0; // exact: real inputs take the real code path

bool is_real(std::complex<double> v) { return v.imag() == kImagTol; }

} // namespace

std::string variant_name(FormulaVariant variant) {
    return variant == FormulaVariant::Paper ? "paper" : "standard";
}

std::vector<std::string> flag_names(unsigned flags) {
    std::vector<std::string> out;
    if (flags & static_cast<unsigned>(LevelFlag::Real)) out.push_back("REAL");
    if (flags & static_cast<unsigned>(LevelFlag::ComplexPair)) out.push_back("COMPLEX_PAIR");
    if (flags & static_cast<unsigned>(LevelFlag::NonnormalizableSuspect))
        out.push_back("NONNORMALIZABLE_SUSPECT");
    if (flags & static_cast<unsigned>(LevelFlag::PaperVariant)) out.push_back("PAPER_VARIANT");
    if (flags & static_cast<unsigned>(LevelFlag::StandardVariant))
        out.push_back("STANDARD_VARIANT");
    return out;
}

double kz_well(int n_z, double L) {
    if (!(L > 0.0)) throw std::invalid_argument("well requires L > 0");
    if (n_z < 1) throw StateOutOfRange("well has no state with n_z < 1");
    return static_cast<double>(n_z) * std::numbers::pi / L;
}

double kz2_morse(double D, double epsilon, int n_z, FormulaVariant variant) {
    if (!(D > 0.0) || !(epsilon > 0.0)) throw std::invalid_argument("Morse requires D, eps > 0");
    if (n_z < 0) throw StateOutOfRange("Morse requires n_z >= 0");
    const double head = std::sqrt(D) / epsilon - static_cast<double>(n_z) - 0.5;
    if (!(head > 0.0)) {
        throw BoundStateCountExceeded("Morse bound-state condition sqrt(D)/eps - n_z - 1/2 > 0 fails");
    }
    if (variant == FormulaVariant::Paper) return head;
    const double root = std::sqrt(D) - (static_cast<double>(n_z) + 0.5) * epsilon;
    return -root * root;
}

double kz2_scarf2(double A, int n_z) {
    if (!(A > 0.0)) throw std::invalid_argument("Scarf II requires A > 0");
    if (A < 2.0) return -0.25; // single level; n_z is ignored
    if (n_z < 0 || static_cast<double>(n_z) >= 0.5 * (A - 1.0)) {
        throw StateOutOfRange("Scarf II requires 0 <= n_z < (A-1)/2 for A >= 2");
    }
    const double t = static_cast<double>(n_z) + 0.5 * (1.0 - A);
    return -t * t;
}

double kz2_samsonov(int n_z) {
    if (n_z < 1) throw StateOutOfRange("Samsonov requires n_z >= 1");
    if (n_z == 2) throw MissingState("Samsonov has no n_z = 2 state");
    return 0.25 * static_cast<double>(n_z) * static_cast<double>(n_z);
}

std::complex<double> axial_kz2(const AxialModel& model, int n_z, FormulaVariant variant) {
    return std::visit(
        [&](const auto& m) -> std::complex<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InfiniteWellAxial>) {
                const double kz = kz_well(n_z, m.L);
                return kz * kz;
            } else if constexpr (std::is_same_v<T, MorseAxial>) {
                return kz2_morse(m.D, m.epsilon, n_z, variant);
            } else if constexpr (std::is_same_v<T, ScarfIIAxial>) {
                return kz2_scarf2(m.A, n_z);
            } else {
                return kz2_samsonov(n_z);
            }
        },
        model);
}

namespace {

void classify(EnergyLevel& level) {
    if (level.value.imag() == 0.0) {
        level.set(LevelFlag::Real);
    } else {
        level.set(LevelFlag::ComplexPair);
    }
    if (is_real(level.ell) && level.ell.real() < 0.0) {
        level.set(LevelFlag::NonnormalizableSuspect);
    }
}

} // namespace

EnergyLevel energy_coulomb(int m, int n_rho, std::complex<double> kz2,
                           const AmbiguityOrdering& ordering, FormulaVariant variant) {
    if (n_rho < 0) throw StateOutOfRange("n_rho must be >= 0");
    if (kz2 == std::complex<double>(0.0, 0.0)) {
        throw DivisionByZero("Coulomb energy undefined for K_z^2 = 0");
    }
    const double offset = variant == FormulaVariant::Paper ? 1.0 : 0.5;
    const double head = 0.5 * (static_cast<double>(m) * static_cast<double>(m) + 3.0)
                        - ordering.shift();

    EnergyLevel level;
    level.labels = QuantumNumbers{n_rho, m, 0};
    level.kz2 = kz2;
    if (is_real(kz2) && kz2.real() > 0.0) {
        // real branch: K_z = sqrt(kz2) > 0
        const double ell = 1.0 / std::sqrt(kz2.real()) - static_cast<double>(n_rho) - offset;
        level.ell = ell;
        level.value = head - 0.5 * ell * ell;
    } else {
        const std::complex<double> kz = std::sqrt(kz2); // principal branch
        const std::complex<double> ell = 1.0 / kz - static_cast<double>(n_rho) - offset;
        level.ell = ell;
        level.value = head - 0.5 * ell * ell;
    }
    classify(level);
    return level;
}

EnergyLevel energy_oscillator(int m, int n_rho, std::complex<double> kz2, double a,
                              const AmbiguityOrdering& ordering) {
    if (!(a > 0.0)) throw std::invalid_argument("oscillator requires a > 0");
    if (n_rho < 0) throw StateOutOfRange("n_rho must be >= 0");
    const double head = 0.5 * (static_cast<double>(m) * static_cast<double>(m) + 3.0)
                        - ordering.shift();

    EnergyLevel level;
    level.labels = QuantumNumbers{n_rho, m, 0};
    level.kz2 = kz2;
    if (is_real(kz2)) {
        const double bracket = kz2.real() / a + 2.0 * static_cast<double>(n_rho) + 1.0;
        level.ell = -bracket;
        level.value = head - 0.5 * bracket * bracket;
    } else {
        const std::complex<double> bracket = kz2 / a + 2.0 * static_cast<double>(n_rho) + 1.0;
        level.ell = -bracket;
        level.value = head - 0.5 * bracket * bracket;
    }
    classify(level);
    return level;
}

double kz2_coulomb_internal(double ell, int n_rho, FormulaVariant variant) {
    if (!(ell >= 0.0)) throw std::invalid_argument("ell must be real and >= 0");
    if (n_rho < 0) throw StateOutOfRange("n_rho must be >= 0");
    const double offset = variant == FormulaVariant::Paper ? 1.0 : 0.5;
    const double denom = static_cast<double>(n_rho) + ell + offset;
    return 1.0 / (denom * denom);
}

namespace {

std::string skip_reason(const std::exception& e, int n_z) {
    if (dynamic_cast<const MissingState*>(&e)) return "MissingState:n_z=" + std::to_string(n_z);
    if (dynamic_cast<const BoundStateCountExceeded*>(&e))
        return "BoundStateCountExceeded:n_z=" + std::to_string(n_z);
    if (dynamic_cast<const StateOutOfRange*>(&e))
        return "StateOutOfRange:n_z=" + std::to_string(n_z);
    return std::string("Error:") + e.what();
}

} // namespace

SpectrumTable spectrum_table(const RadialModel& radial, const AxialModel& axial,
                             const AmbiguityOrdering& ordering,
                             const QuantumNumberRanges& ranges, FormulaVariant variant) {
    if (ranges.n_rho_max < 0 || ranges.m_max < 0) {
        throw std::invalid_argument("quantum-number ranges must be non-negative");
    }

    SpectrumTable table;
    const int nz_start = axial_nz_start(axial);
    const bool scarf_single = std::holds_alternative<ScarfIIAxial>(axial)
                              && std::get<ScarfIIAxial>(axial).A < 2.0;

    const unsigned variant_flag = variant == FormulaVariant::Paper
                                      ? static_cast<unsigned>(LevelFlag::PaperVariant)
                                      : static_cast<unsigned>(LevelFlag::StandardVariant);

    for (int n_z = nz_start; n_z <= ranges.n_z_max; ++n_z) {
        if (scarf_single && n_z > 0) {
            table.skipped.push_back(
                {QuantumNumbers{0, 0, n_z}, "SingleStateForABelow2:n_z=" + std::to_string(n_z)});
            continue;
        }
        std::complex<double> kz2;
        try {
            kz2 = axial_kz2(axial, n_z, variant);
        } catch (const std::domain_error& e) {
            table.skipped.push_back({QuantumNumbers{0, 0, n_z}, skip_reason(e, n_z)});
            continue;
        }
        for (int n_rho = 0; n_rho <= ranges.n_rho_max; ++n_rho) {
            for (int m = -ranges.m_max; m <= ranges.m_max; ++m) {
                EnergyLevel level = std::visit(
                    [&](const auto& r) -> EnergyLevel {
                        using T = std::decay_t<decltype(r)>;
                        if constexpr (std::is_same_v<T, CoulombRadial>) {
                            return energy_coulomb(m, n_rho, kz2, ordering, variant);
                        } else {
                            return energy_oscillator(m, n_rho, kz2, r.a, ordering);
                        }
                    },
                    radial);
                level.labels.n_z = n_z;
                level.flags |= variant_flag;
                if (level.value.imag() != 0.0) {
                    EnergyLevel conj_level = level;
                    conj_level.value = std::conj(level.value);
                    conj_level.ell = std::conj(level.ell);
                    conj_level.kz2 = std::conj(level.kz2);
                    table.levels.push_back(level);
                    table.levels.push_back(conj_level);
                } else {
                    table.levels.push_back(level);
                }
            }
        }
    }

    std::sort(table.levels.begin(), table.levels.end(),
              [](const EnergyLevel& a, const EnergyLevel& b) {
                  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
                  if (a.labels.n_rho != b.labels.n_rho) return a.labels.n_rho < b.labels.n_rho;
                  if (a.labels.m != b.labels.m) return a.labels.m < b.labels.m;
                  if (a.labels.n_z != b.labels.n_z) return a.labels.n_z < b.labels.n_z;
                  return a.value.imag() < b.value.imag();
              });
    return table;
}

} // namespace pdm

#include "pdm/ordering.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pdm {

namespace {
constexpr double kConstraintTol = 1e-12;
}

AmbiguityOrdering::AmbiguityOrdering(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma))) {
        throw std::invalid_argument("ordering parameters must be finite");
    }
    if (std::abs(alpha + beta + gamma + 1.0) > kConstraintTol) {
        throw std::invalid_argument("ordering violates alpha + beta + gamma = -1");
    }
}

double AmbiguityOrdering::zeta() const {
    return alpha_ * (alpha_ - 1.0) + gamma_ * (gamma_ - 1.0) - beta_ * (beta_ + 1.0);
}

const std::vector<NamedOrdering>& preset_orderings() {
    static const std::vector<NamedOrdering> presets = {
        {"Gora-Williams", AmbiguityOrdering(-1.0, 0.0, 0.0)},
        {"BenDaniel-Duke", AmbiguityOrdering(0.0, -1.0, 0.0)},
        {"Zhu-Kroemer", AmbiguityOrdering(-0.5, 0.0, -0.5)},
        {"Li-Kuhn", AmbiguityOrdering(0.0, -0.5, -0.5)},
        {"Mustafa-Mazharimousavi", AmbiguityOrdering(-0.25, -0.5, -0.25)},
    };
    return presets;
}

namespace {

// Lowercase alphanumerics only; drops hyphens, spaces and any dash bytes.
std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (unsigned char c : name) {
        if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

} // namespace

std::optional<AmbiguityOrdering> find_preset(std::string_view name) {
    const std::string wanted = normalize_name(name);
    for (const auto& preset : preset_orderings()) {
        if (normalize_name(preset.name) == wanted) return preset.ordering;
    }
    return std::nullopt;
}

double kphi2_from_energy(double energy, int m, const AmbiguityOrdering& ordering) {
    const double md = static_cast<double>(m);
    return 2.0 * energy + 2.0 * (ordering.zeta() - ordering.beta() - 1.0) - md * md;
}

std::complex<double> ell_from_kphi2(double kphi2) {
    if (kphi2 <= 1.0) return {std::sqrt(1.0 - kphi2), 0.0};
    return {0.0, std::sqrt(kphi2 - 1.0)};
}

SeparationConstants make_separation(double energy, int m, const AmbiguityOrdering& ordering,
                                    std::complex<double> kz2) {
    const double kphi2 = kphi2_from_energy(energy, m, ordering);
    return SeparationConstants{kphi2, ell_from_kphi2(kphi2), kz2};
}

} // namespace pdm

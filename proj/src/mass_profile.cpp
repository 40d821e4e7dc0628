#include "pdm/mass_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace pdm {

namespace {

bool nearly_equal(double a, double b, double tol = 1e-12) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool factor_constant(const MassProfile::Factor& f, const double* probes, int n) {
    const double f0 = f(probes[0]);
    for (int i = 1; i < n; ++i) {
        if (!nearly_equal(f(probes[i]), f0)) return false;
    }
    return true;
}

} // namespace

MassProfile::MassProfile(Factor g, Factor f, Factor k)
    : g_(std::move(g)), f_(std::move(f)), k_(std::move(k)) {
    if (!g_ || !f_ || !k_) throw std::invalid_argument("mass factors must be callable");

    static const double rho_probes[] = {0.5, 1.0, 2.0, 3.7};
    static const double phi_probes[] = {0.0, 1.0, 2.5, 6.0};
    static const double z_probes[] = {-2.0, 0.0, 1.0, 3.3};

    f_uniform_ = factor_constant(f_, phi_probes, 4);

    bool g_inverse_square = true;
    for (double rho : rho_probes) {
        if (!nearly_equal(g_(rho) * rho * rho, g_(1.0))) {
            g_inverse_square = false;
            break;
        }
    }
    canonical_ = g_inverse_square && f_uniform_ && factor_constant(k_, z_probes, 4);
}

MassProfile MassProfile::canonical() {
    return MassProfile([](double rho) { return 1.0 / (rho * rho); },
                       [](double) { return 1.0; }, [](double) { return 1.0; });
}

double MassProfile::g(double rho) const { return g_(rho); }
double MassProfile::f(double phi) const { return f_(phi); }
double MassProfile::k(double z) const { return k_(z); }

double MassProfile::mass(double rho, double phi, double z) const {
    const double m = g_(rho) * f_(phi) * k_(z);
    if (!(m > 0.0)) throw std::domain_error("mass profile must be strictly positive");
    return m;
}

} // namespace pdm

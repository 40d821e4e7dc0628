#pragma once

#include <functional>

namespace pdm {

/// Factorized mass profile M(rho, phi, z) = g(rho) f(phi) k(z), each factor
/// strictly positive where evaluated. The canonical instance is g = rho^-2,
/// f = k = 1; it is detected at construction so the ordering potential can
/// use closed-form log-derivatives instead of finite differences.
class MassProfile {
public:
    using Factor = std::function<double(double)>;

    MassProfile(Factor g, Factor f, Factor k);

    static MassProfile canonical();

    double g(double rho) const;
    double f(double phi) const;
    double k(double z) const;

    /// g(rho) f(phi) k(z); throws std::domain_error if the product is not > 0.
    double mass(double rho, double phi, double z) const;

    /// True when g(rho) = c/rho^2 with f, k constant (detected by sampling).
    bool canonical_radial_inverse_square() const { return canonical_; }

    /// True when f is constant (required by the 2D grid operators).
    bool azimuthally_uniform() const { return f_uniform_; }

private:
    Factor g_;
    Factor f_;
    Factor k_;
    bool canonical_ = false;
    bool f_uniform_ = false;
};

} // namespace pdm

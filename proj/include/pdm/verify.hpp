#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdm/eig.hpp"
#include "pdm/grid.hpp"
#include "pdm/models.hpp"
#include "pdm/ordering.hpp"
#include "pdm/spectra.hpp"
#include "pdm/tridiagonal.hpp"

namespace pdm {

enum class ToleranceKind { Relative, Absolute };

/// One tracked eigenvalue: the numeric value on the base grid against the
/// closed forms of both variants. Deviations are computed on demand from the
/// stored values, never cached.
struct ComparisonRow {
    int index = 0; // quantum number (model-specific start)
    std::complex<double> numeric;
    std::complex<double> analytic_paper;
    std::complex<double> analytic_standard;
    double convergence_ratio = 0.0; // NaN when not computable

    std::complex<double> analytic(FormulaVariant v) const {
        return v == FormulaVariant::Paper ? analytic_paper : analytic_standard;
    }
    double abs_deviation(FormulaVariant v) const { return std::abs(numeric - analytic(v)); }
    double rel_deviation(FormulaVariant v) const {
        const double scale = std::abs(analytic(v));
        return abs_deviation(v) / (scale > 0.0 ? scale : 1.0);
    }
};

struct VerificationReport {
    std::string target; // "radial" | "axial"
    std::string model;
    std::vector<std::pair<std::string, double>> params;
    double grid_min = 0.0;
    double grid_max = 0.0;
    int grid_points = 0;
    FormulaVariant variant = FormulaVariant::Standard;
    ToleranceKind tol_kind = ToleranceKind::Relative;
    double tol_value = 0.0;
    std::vector<ComparisonRow> rows;
    std::vector<std::string> notes;

    bool row_pass(const ComparisonRow& row) const {
        return (tol_kind == ToleranceKind::Relative ? row.rel_deviation(variant)
                                                    : row.abs_deviation(variant))
               <= tol_value;
    }
    bool pass() const {
        for (const auto& row : rows) {
            if (!row_pass(row)) return false;
        }
        return !rows.empty();
    }
};

/// Finite-difference verification of the radial quantization: numeric
/// eigenvalues of -U'' + [(ell^2-1/4)/rho^2 + Vt] U against -K_z^2 from the
/// closed forms (Coulomb Paper/Standard offsets; oscillator a(2n+ell+1)).
VerificationReport verify_radial(const RadialModel& model, double ell, int n_max,
                                 const Discretization& disc,
                                 FormulaVariant variant = FormulaVariant::Standard);

/// Finite-difference verification of the axial K_z^2 claims; complex solver
/// for the PT models. For Samsonov the neighborhood of 1.0 (the missing
/// n_z = 2 slot) is reported descriptively, never judged.
VerificationReport verify_axial(const AxialModel& model, int n_max, const Discretization& disc,
                                FormulaVariant variant = FormulaVariant::Standard);

/// Default oracle grids: radial Coulomb [1e-3, 400] x 8000, radial oscillator
/// [1e-3, 20] x 4000; axial grids come from default_axial_disc with the
/// model-specific default point counts below.
Discretization default_radial_disc(const RadialModel& model, int n_points = 0);
int default_axial_points(const AxialModel& model);

} // namespace pdm

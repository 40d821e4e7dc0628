#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdm/composite.hpp"
#include "pdm/models.hpp"
#include "pdm/ordering.hpp"
#include "pdm/spectra.hpp"
#include "pdm/verify.hpp"

namespace pdm {

/// Numbers in emitted artifacts carry 12 significant digits; the writer keeps
/// key order fixed so identical tables serialize byte-for-byte.
std::string format_number(double v);

/// Model parameters echo at full precision so a re-read config regenerates
/// the table bit-for-bit.
std::string format_param(double v);

struct SpectrumRun {
    RadialModel radial;
    AxialModel axial;
    AmbiguityOrdering ordering;
    FormulaVariant variant;
    QuantumNumberRanges ranges;
    SpectrumTable table;
};

std::string spectrum_to_json(const SpectrumRun& run);
std::string spectrum_to_csv(const SpectrumRun& run);

struct SweepPoint {
    std::string label; // formatted sweep value or ordering name
    SpectrumRun run;
};

std::string sweep_to_json(const std::string& param, const std::vector<SweepPoint>& points);
std::string sweep_to_csv(const std::string& param, const std::vector<SweepPoint>& points);

std::string report_to_json(const VerificationReport& report);
std::string composite_to_json(const CompositeVerification& cv, const AmbiguityOrdering& ordering);

/// JSON fragments shared by the writers.
std::string ordering_json(const AmbiguityOrdering& ordering);
std::string model_json(const RadialModel& radial, const AxialModel& axial);

} // namespace pdm

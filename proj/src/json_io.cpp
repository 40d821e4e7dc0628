#include "pdm/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace pdm {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + escape(s) + "\""; }

std::string jnum_or_null(double v) {
    if (!std::isfinite(v)) return "null";
    return format_number(v);
}

std::string flags_json(unsigned flags) {
    std::string out = "[";
    bool first = true;
    for (const auto& name : flag_names(flags)) {
        if (!first) out += ", ";
        out += jstr(name);
        first = false;
    }
    return out + "]";
}

std::string level_json(const EnergyLevel& lvl) {
    std::string out = "{";
    out += "\"n_rho\": " + std::to_string(lvl.labels.n_rho);
    out += ", \"m\": " + std::to_string(lvl.labels.m);
    out += ", \"n_z\": " + std::to_string(lvl.labels.n_z);
    out += ", \"E_re\": " + format_number(lvl.value.real());
    out += ", \"E_im\": " + format_number(lvl.value.imag());
    out += ", \"kz2_re\": " + format_number(lvl.kz2.real());
    out += ", \"kz2_im\": " + format_number(lvl.kz2.imag());
    out += ", \"ell_re\": " + format_number(lvl.ell.real());
    out += ", \"ell_im\": " + format_number(lvl.ell.imag());
    out += ", \"flags\": " + flags_json(lvl.flags);
    return out + "}";
}

std::string levels_json(const SpectrumTable& table, const std::string& indent) {
    std::string out = "[";
    for (std::size_t i = 0; i < table.levels.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += indent + "  " + level_json(table.levels[i]);
    }
    if (!table.levels.empty()) out += "\n" + indent;
    return out + "]";
}

std::string skipped_json(const SpectrumTable& table) {
    std::string out = "[";
    for (std::size_t i = 0; i < table.skipped.size(); ++i) {
        if (i > 0) out += ", ";
        out += "{\"n_z\": " + std::to_string(table.skipped[i].labels.n_z) + ", \"reason\": "
               + jstr(table.skipped[i].reason) + "}";
    }
    return out + "]";
}

std::string ranges_json(const QuantumNumberRanges& r) {
    return "{\"nrho_max\": " + std::to_string(r.n_rho_max) + ", \"m_max\": "
           + std::to_string(r.m_max) + ", \"nz_max\": " + std::to_string(r.n_z_max) + "}";
}

std::string run_body_json(const SpectrumRun& run, const std::string& indent) {
    std::string out;
    out += indent + "\"levels\": " + levels_json(run.table, indent) + ",\n";
    out += indent + "\"skipped\": " + skipped_json(run.table) + "\n";
    return out;
}

std::string csv_row(const EnergyLevel& lvl) {
    std::string out;
    out += std::to_string(lvl.labels.n_rho) + "," + std::to_string(lvl.labels.m) + ","
           + std::to_string(lvl.labels.n_z);
    out += "," + format_number(lvl.value.real()) + "," + format_number(lvl.value.imag());
    out += "," + format_number(lvl.kz2.real()) + "," + format_number(lvl.kz2.imag());
    out += "," + format_number(lvl.ell.real()) + "," + format_number(lvl.ell.imag());
    out += ",";
    const auto names = flag_names(lvl.flags);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += "|";
        out += names[i];
    }
    return out;
}

constexpr const char* kCsvHeader = "n_rho,m,n_z,E_re,E_im,kz2_re,kz2_im,ell_re,ell_im,flags";

} // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_param(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string ordering_json(const AmbiguityOrdering& ordering) {
    std::string name = "custom";
    for (const auto& preset : preset_orderings()) {
        if (preset.ordering.alpha() == ordering.alpha() && preset.ordering.beta() == ordering.beta()
            && preset.ordering.gamma() == ordering.gamma()) {
            name = preset.name;
            break;
        }
    }
    std::string out = "{";
    out += "\"name\": " + jstr(name);
    out += ", \"alpha\": " + format_param(ordering.alpha());
    out += ", \"beta\": " + format_param(ordering.beta());
    out += ", \"gamma\": " + format_param(ordering.gamma());
    out += ", \"zeta\": " + format_number(ordering.zeta());
    out += ", \"shift\": " + format_number(ordering.shift());
    return out + "}";
}

std::string model_json(const RadialModel& radial, const AxialModel& axial) {
    std::string out = "{";
    out += "\"radial\": " + jstr(radial_name(radial));
    if (const auto* osc = std::get_if<OscillatorRadial>(&radial)) {
        out += ", \"a\": " + format_param(osc->a);
    }
    out += ", \"axial\": " + jstr(axial_name(axial));
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InfiniteWellAxial>) {
                out += ", \"L\": " + format_param(m.L);
            } else if constexpr (std::is_same_v<T, MorseAxial>) {
                out += ", \"D\": " + format_param(m.D);
                out += ", \"eps\": " + format_param(m.epsilon);
            } else if constexpr (std::is_same_v<T, ScarfIIAxial>) {
                out += ", \"A\": " + format_param(m.A);
            }
        },
        axial);
    return out + "}";
}

std::string spectrum_to_json(const SpectrumRun& run) {
    std::string out = "{\n";
    out += "  \"schema\": 1,\n";
    out += "  \"command\": \"spectrum\",\n";
    out += "  \"model\": " + model_json(run.radial, run.axial) + ",\n";
    out += "  \"ordering\": " + ordering_json(run.ordering) + ",\n";
    out += "  \"variant\": " + jstr(variant_name(run.variant)) + ",\n";
    out += "  \"ranges\": " + ranges_json(run.ranges) + ",\n";
    out += run_body_json(run, "  ");
    return out + "}\n";
}

std::string spectrum_to_csv(const SpectrumRun& run) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& lvl : run.table.levels) out += csv_row(lvl) + "\n";
    return out;
}

std::string sweep_to_json(const std::string& param, const std::vector<SweepPoint>& points) {
    std::string out = "{\n";
    out += "  \"schema\": 1,\n";
    out += "  \"command\": \"sweep\",\n";
    out += "  \"param\": " + jstr(param) + ",\n";
    if (!points.empty()) {
        const auto& first = points.front().run;
        out += "  \"model\": " + model_json(first.radial, first.axial) + ",\n";
        out += "  \"variant\": " + jstr(variant_name(first.variant)) + ",\n";
        out += "  \"ranges\": " + ranges_json(first.ranges) + ",\n";
    }
    out += "  \"points\": [";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += "    {\n";
        out += "      \"value\": " + jstr(points[i].label) + ",\n";
        out += "      \"ordering\": " + ordering_json(points[i].run.ordering) + ",\n";
        out += run_body_json(points[i].run, "      ");
        out += "    }";
    }
    if (!points.empty()) out += "\n  ";
    out += "]\n";
    return out + "}\n";
}

std::string sweep_to_csv(const std::string& param, const std::vector<SweepPoint>& points) {
    std::string out = "param,value," + std::string(kCsvHeader) + "\n";
    for (const auto& point : points) {
        for (const auto& lvl : point.run.table.levels) {
            out += param + "," + point.label + "," + csv_row(lvl) + "\n";
        }
    }
    return out;
}

std::string report_to_json(const VerificationReport& report) {
    std::string out = "{\n";
    out += "  \"schema\": 1,\n";
    out += "  \"command\": \"verify\",\n";
    out += "  \"target\": " + jstr(report.target) + ",\n";
    out += "  \"model\": " + jstr(report.model) + ",\n";
    out += "  \"params\": {";
    for (std::size_t i = 0; i < report.params.size(); ++i) {
        if (i > 0) out += ", ";
        out += jstr(report.params[i].first) + ": " + format_number(report.params[i].second);
    }
    out += "},\n";
    out += "  \"grid\": {\"min\": " + format_number(report.grid_min)
           + ", \"max\": " + format_number(report.grid_max)
           + ", \"points\": " + std::to_string(report.grid_points) + "},\n";
    out += "  \"variant\": " + jstr(variant_name(report.variant)) + ",\n";
    out += "  \"tolerance\": {\"kind\": "
           + jstr(report.tol_kind == ToleranceKind::Relative ? "relative" : "absolute")
           + ", \"value\": " + format_number(report.tol_value) + "},\n";
    out += "  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {";
        out += "\"index\": " + std::to_string(row.index);
        out += ", \"numeric_re\": " + format_number(row.numeric.real());
        out += ", \"numeric_im\": " + format_number(row.numeric.imag());
        out += ", \"paper_re\": " + format_number(row.analytic_paper.real());
        out += ", \"paper_im\": " + format_number(row.analytic_paper.imag());
        out += ", \"standard_re\": " + format_number(row.analytic_standard.real());
        out += ", \"standard_im\": " + format_number(row.analytic_standard.imag());
        out += ", \"abs_dev_paper\": " + format_number(row.abs_deviation(FormulaVariant::Paper));
        out += ", \"rel_dev_paper\": " + format_number(row.rel_deviation(FormulaVariant::Paper));
        out += ", \"abs_dev_standard\": "
               + format_number(row.abs_deviation(FormulaVariant::Standard));
        out += ", \"rel_dev_standard\": "
               + format_number(row.rel_deviation(FormulaVariant::Standard));
        out += ", \"convergence_ratio\": " + jnum_or_null(row.convergence_ratio);
        out += ", \"pass\": " + std::string(report.row_pass(row) ? "true" : "false");
        out += "}";
    }
    if (!report.rows.empty()) out += "\n  ";
    out += "],\n";
    out += "  \"notes\": [";
    for (std::size_t i = 0; i < report.notes.size(); ++i) {
        if (i > 0) out += ", ";
        out += jstr(report.notes[i]);
    }
    out += "],\n";
    out += std::string("  \"pass\": ") + (report.pass() ? "true" : "false") + "\n";
    return out + "}\n";
}

std::string composite_to_json(const CompositeVerification& cv,
                              const AmbiguityOrdering& ordering) {
    std::string out = "{\n";
    out += "  \"schema\": 1,\n";
    out += "  \"command\": \"verify\",\n";
    out += "  \"target\": \"composite\",\n";
    out += "  \"model\": {\"radial\": \"coulomb\", \"axial\": \"well\", \"L\": "
           + format_number(cv.L) + "},\n";
    out += "  \"ordering\": " + ordering_json(ordering) + ",\n";
    out += "  \"state\": {\"n_rho\": " + std::to_string(cv.n_rho) + ", \"m\": "
           + std::to_string(cv.m) + ", \"n_z\": " + std::to_string(cv.n_z)
           + ", \"ell\": " + format_number(cv.ell) + "},\n";
    out += "  \"energy\": " + format_number(cv.energy) + ",\n";
    out += "  \"grids\": [";
    for (int i = 0; i < 3; ++i) {
        if (i > 0) out += ", ";
        out += "{\"rho_points\": " + std::to_string(cv.rho_points[i])
               + ", \"z_points\": " + std::to_string(cv.z_points[i]) + "}";
    }
    out += "],\n";
    out += "  \"residuals\": [" + format_number(cv.residuals[0]) + ", "
           + format_number(cv.residuals[1]) + ", " + format_number(cv.residuals[2]) + "],\n";
    out += "  \"ratios\": [" + format_number(cv.ratios[0]) + ", " + format_number(cv.ratios[1])
           + "],\n";
    out += std::string("  \"pass\": ") + (cv.pass() ? "true" : "false") + "\n";
    return out + "}\n";
}

} // namespace pdm

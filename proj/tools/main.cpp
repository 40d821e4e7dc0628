// pdm-spectra: spectrum tables, oracle verification and parameter sweeps for
// the rho^-2 position-dependent-mass cylindrical models.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "pdm/composite.hpp"
#include "pdm/errors.hpp"
#include "pdm/json_io.hpp"
#include "pdm/models.hpp"
#include "pdm/ordering.hpp"
#include "pdm/spectra.hpp"
#include "pdm/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDeviation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEmpty = 3;

struct Options {
    std::string command;
    std::string radial = "coulomb";
    double a = 1.0;
    std::string axial = "well";
    double L = std::numbers::pi;
    bool L_explicit = false;
    double D = 25.0;
    double eps = 1.0;
    double A = 5.0;
    std::string ordering = "BenDaniel-Duke";
    std::string variant = "paper";
    int nrho_max = 1;
    int m_max = 1;
    int nz_max = 3;
    int grid_points = 0; // 0: model default
    double grid_min = std::numeric_limits<double>::quiet_NaN();
    double grid_max = std::numeric_limits<double>::quiet_NaN();
    double ell = 0.5;
    int nmax = 3;
    std::string target;
    std::string format = "json";
    std::string out;
    // sweep
    std::string param;
    std::string values;
    std::string range;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_shared_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--radial", opt.radial, "radial model: coulomb|oscillator");
    cmd->add_option("--a", opt.a, "oscillator strength a > 0");
    cmd->add_option("--axial", opt.axial, "axial model: well|morse|scarf2|samsonov");
    cmd->add_option("--L", opt.L, "well width L > 0");
    cmd->add_option("--D", opt.D, "Morse depth D > 0");
    cmd->add_option("--eps", opt.eps, "Morse range parameter eps > 0");
    cmd->add_option("--A", opt.A, "Scarf II strength A > 0");
    cmd->add_option("--ordering", opt.ordering, "preset name or alpha,beta,gamma");
    cmd->add_option("--variant", opt.variant, "paper|standard");
    cmd->add_option("--nrho-max", opt.nrho_max, "largest n_rho");
    cmd->add_option("--m-max", opt.m_max, "largest |m|");
    cmd->add_option("--nz-max", opt.nz_max, "largest n_z");
    cmd->add_option("--grid-points", opt.grid_points, "oracle grid points");
    cmd->add_option("--grid-min", opt.grid_min, "oracle grid lower end");
    cmd->add_option("--grid-max", opt.grid_max, "oracle grid upper end");
    cmd->add_option("--ell", opt.ell, "radial ell for verification");
    cmd->add_option("--nmax", opt.nmax, "number of states to verify");
    cmd->add_option("--format", opt.format, "json|csv");
    cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
}

double require_number(const json& j, const char* key) {
    if (!j.is_number()) throw ConfigError(std::string("config key is not a number: ") + key);
    return j.get<double>();
}

void apply_config_file(const std::string& path, Options& opt) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    const auto str = [&](const char* key, std::string& dst) {
        if (j.contains(key) && j[key].is_string()) dst = j[key].get<std::string>();
    };
    const auto num = [](const json& src, const char* key, auto& dst) {
        if (src.contains(key) && src[key].is_number()) dst = src[key].get<std::decay_t<decltype(dst)>>();
    };

    str("command", opt.command);
    str("variant", opt.variant);
    str("target", opt.target);
    str("format", opt.format);
    str("out", opt.out);
    str("param", opt.param);
    str("values", opt.values);
    str("range", opt.range);
    num(j, "ell", opt.ell);
    num(j, "nmax", opt.nmax);

    const json& model = j.contains("model") && j["model"].is_object() ? j["model"] : j;
    if (model.contains("radial") && model["radial"].is_string())
        opt.radial = model["radial"].get<std::string>();
    if (model.contains("axial") && model["axial"].is_string())
        opt.axial = model["axial"].get<std::string>();
    num(model, "a", opt.a);
    if (model.contains("L") && model["L"].is_number()) opt.L_explicit = true;
    num(model, "L", opt.L);
    num(model, "D", opt.D);
    num(model, "eps", opt.eps);
    num(model, "A", opt.A);

    if (j.contains("ordering")) {
        const json& o = j["ordering"];
        if (o.is_string()) {
            opt.ordering = o.get<std::string>();
        } else if (o.is_array() && o.size() == 3) {
            std::ostringstream s;
            s << require_number(o[0], "ordering[0]") << "," << require_number(o[1], "ordering[1]")
              << "," << require_number(o[2], "ordering[2]");
            opt.ordering = s.str();
        } else if (o.is_object()) {
            std::ostringstream s;
            s.precision(17);
            s << require_number(o.at("alpha"), "alpha") << ","
              << require_number(o.at("beta"), "beta") << ","
              << require_number(o.at("gamma"), "gamma");
            opt.ordering = s.str();
        }
    }
    if (j.contains("ranges") && j["ranges"].is_object()) {
        const json& r = j["ranges"];
        num(r, "nrho_max", opt.nrho_max);
        num(r, "m_max", opt.m_max);
        num(r, "nz_max", opt.nz_max);
    }
    if (j.contains("grid") && j["grid"].is_object()) {
        const json& g = j["grid"];
        num(g, "points", opt.grid_points);
        num(g, "min", opt.grid_min);
        num(g, "max", opt.grid_max);
    }
    if (j.contains("grid_points")) num(j, "grid_points", opt.grid_points);
}

pdm::RadialModel make_radial(const Options& opt) {
    if (opt.radial == "coulomb") return pdm::CoulombRadial{};
    if (opt.radial == "oscillator") return pdm::OscillatorRadial(opt.a);
    throw ConfigError("unknown radial model: " + opt.radial);
}

pdm::AxialModel make_axial(const Options& opt) {
    if (opt.axial == "well") return pdm::InfiniteWellAxial(opt.L);
    if (opt.axial == "morse") return pdm::MorseAxial(opt.D, opt.eps);
    if (opt.axial == "scarf2") return pdm::ScarfIIAxial(opt.A);
    if (opt.axial == "samsonov") return pdm::SamsonovAxial{};
    throw ConfigError("unknown axial model: " + opt.axial);
}

pdm::AmbiguityOrdering make_ordering(const std::string& spec) {
    if (spec.find(',') != std::string::npos) {
        double v[3];
        char extra;
        std::istringstream s(spec);
        char c1, c2;
        if (!(s >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',' || (s >> extra)) {
            throw ConfigError("cannot parse ordering triple: " + spec);
        }
        return pdm::AmbiguityOrdering(v[0], v[1], v[2]);
    }
    const auto preset = pdm::find_preset(spec);
    if (!preset) throw ConfigError("unknown ordering preset: " + spec);
    return *preset;
}

pdm::FormulaVariant make_variant(const std::string& name) {
    if (name == "paper") return pdm::FormulaVariant::Paper;
    if (name == "standard") return pdm::FormulaVariant::Standard;
    throw ConfigError("unknown variant: " + name);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + opt.out);
    out << text;
}

int run_spectrum(const Options& opt) {
    const pdm::SpectrumRun run{
        make_radial(opt),
        make_axial(opt),
        make_ordering(opt.ordering),
        make_variant(opt.variant),
        pdm::QuantumNumberRanges{opt.nrho_max, opt.m_max, opt.nz_max},
        {}};
    pdm::SpectrumRun filled = run;
    filled.table = pdm::spectrum_table(run.radial, run.axial, run.ordering, run.ranges,
                                       run.variant);
    if (opt.format != "json" && opt.format != "csv") {
        throw ConfigError("unknown format: " + opt.format);
    }
    emit(opt, opt.format == "json" ? pdm::spectrum_to_json(filled)
                                   : pdm::spectrum_to_csv(filled));
    return filled.table.levels.empty() ? kExitEmpty : kExitOk;
}

pdm::Discretization radial_disc(const Options& opt, const pdm::RadialModel& model) {
    pdm::Discretization disc = pdm::default_radial_disc(model, opt.grid_points);
    const double lo = std::isnan(opt.grid_min) ? disc.x_min : opt.grid_min;
    const double hi = std::isnan(opt.grid_max) ? disc.x_max : opt.grid_max;
    return {lo, hi, disc.n_points};
}

pdm::Discretization axial_disc(const Options& opt, const pdm::AxialModel& model) {
    const int points = opt.grid_points > 0 ? opt.grid_points : pdm::default_axial_points(model);
    pdm::Discretization disc = pdm::default_axial_disc(model, points);
    const double lo = std::isnan(opt.grid_min) ? disc.x_min : opt.grid_min;
    const double hi = std::isnan(opt.grid_max) ? disc.x_max : opt.grid_max;
    return {lo, hi, points};
}

int run_verify(const Options& opt) {
    const auto variant = make_variant(opt.variant);
    if (opt.target == "radial") {
        const auto model = make_radial(opt);
        const auto report = pdm::verify_radial(model, opt.ell, opt.nmax,
                                               radial_disc(opt, model), variant);
        emit(opt, pdm::report_to_json(report));
        return report.pass() ? kExitOk : kExitDeviation;
    }
    if (opt.target == "axial") {
        const auto model = make_axial(opt);
        const auto report =
            pdm::verify_axial(model, opt.nmax, axial_disc(opt, model), variant);
        emit(opt, pdm::report_to_json(report));
        return report.pass() ? kExitOk : kExitDeviation;
    }
    if (opt.target == "composite") {
        if (opt.radial != "coulomb" || opt.axial != "well") {
            throw ConfigError("composite verification supports the coulomb x well pair");
        }
        const auto ordering = make_ordering(opt.ordering);
        // without an explicit L the study uses its own geometry (implied ell = 3)
        const auto cv = opt.L_explicit
                            ? pdm::verify_composite_coulomb_well(ordering, opt.L)
                            : pdm::verify_composite_coulomb_well(ordering);
        emit(opt, pdm::composite_to_json(cv, ordering));
        return cv.pass() ? kExitOk : kExitDeviation;
    }
    throw ConfigError("verify needs --target radial|axial|composite");
}

int sweep_threads() {
    if (const char* env = std::getenv("PDM_SPECTRA_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(s);
    while (std::getline(stream, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_sweep(const Options& opt) {
    if (opt.param.empty()) throw ConfigError("sweep needs --param");
    std::vector<std::string> tokens;
    if (!opt.values.empty()) {
        if (opt.param == "ordering" && opt.values == "all") {
            for (const auto& p : pdm::preset_orderings()) tokens.push_back(p.name);
        } else {
            tokens = split(opt.values, ',');
        }
    } else if (!opt.range.empty()) {
        const auto parts = split(opt.range, ':');
        if (parts.size() != 3) throw ConfigError("range must be start:stop:step");
        const double start = std::stod(parts[0]);
        const double stop = std::stod(parts[1]);
        const double step = std::stod(parts[2]);
        if (!(step > 0.0)) throw ConfigError("range step must be > 0");
        for (double v = start; v <= stop + 1e-12 * std::abs(step); v += step) {
            tokens.push_back(pdm::format_number(v));
        }
    }
    if (tokens.empty()) throw ConfigError("empty sweep list");

    struct Slot {
        std::optional<pdm::SweepPoint> point;
        std::string error;
    };
    std::vector<Slot> slots(tokens.size());

    const auto compute = [&](std::size_t i) {
        Options local = opt;
        const std::string& tok = tokens[i];
        try {
            if (opt.param == "ordering") {
                local.ordering = tok;
            } else if (opt.param == "L") {
                local.L = std::stod(tok);
            } else if (opt.param == "D") {
                local.D = std::stod(tok);
            } else if (opt.param == "eps") {
                local.eps = std::stod(tok);
            } else if (opt.param == "A") {
                local.A = std::stod(tok);
            } else if (opt.param == "a") {
                local.a = std::stod(tok);
            } else {
                throw ConfigError("unknown sweep param: " + opt.param);
            }
            pdm::SpectrumRun run{make_radial(local),
                                 make_axial(local),
                                 make_ordering(local.ordering),
                                 make_variant(local.variant),
                                 pdm::QuantumNumberRanges{local.nrho_max, local.m_max,
                                                          local.nz_max},
                                 {}};
            run.table =
                pdm::spectrum_table(run.radial, run.axial, run.ordering, run.ranges, run.variant);
            slots[i].point = pdm::SweepPoint{tok, std::move(run)};
        } catch (const std::exception& e) {
            slots[i].error = e.what();
        }
    };

    const int threads = std::min<int>(sweep_threads(), static_cast<int>(tokens.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < tokens.size(); ++i) compute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tokens.size();) compute(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<pdm::SweepPoint> points;
    bool any_levels = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].point) {
            any_levels = any_levels || !slots[i].point->run.table.levels.empty();
            points.push_back(std::move(*slots[i].point));
        } else {
            std::cerr << "sweep point " << tokens[i] << " failed: " << slots[i].error << "\n";
        }
    }
    if (points.empty()) throw ConfigError("every sweep point failed");

    if (opt.format == "json") {
        emit(opt, pdm::sweep_to_json(opt.param, points));
    } else if (opt.format == "csv") {
        emit(opt, pdm::sweep_to_csv(opt.param, points));
    } else {
        throw ConfigError("unknown format: " + opt.format);
    }
    return any_levels ? kExitOk : kExitEmpty;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and oracle-verified spectra for rho^-2 PDM cylindrical models"};
    app.require_subcommand(0, 1);

    Options opt;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (used without a subcommand)");

    Options flags; // flag values land here; merged over the config afterwards
    CLI::App* spectrum = app.add_subcommand("spectrum", "emit a closed-form spectrum table");
    CLI::App* verify = app.add_subcommand("verify", "compare closed forms against the oracle");
    CLI::App* sweep = app.add_subcommand("sweep", "spectrum tables along a parameter axis");
    for (CLI::App* cmd : {spectrum, verify, sweep}) {
        add_shared_options(cmd, flags);
        cmd->add_option("--config", config_path, "JSON config file");
    }
    verify->add_option("--target", flags.target, "radial|axial|composite");
    sweep->add_option("--param", flags.param, "L|D|eps|A|a|ordering");
    sweep->add_option("--values", flags.values, "comma-separated values ('all' for orderings)");
    sweep->add_option("--range", flags.range, "start:stop:step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (!config_path.empty()) apply_config_file(config_path, opt);

        CLI::App* active = nullptr;
        for (CLI::App* cmd : {spectrum, verify, sweep}) {
            if (cmd->parsed()) active = cmd;
        }
        if (active) {
            opt.command = active->get_name();
            // flags win over config values
            const auto take = [&](const char* name, auto member) {
                if (active->count(name) > 0) opt.*member = flags.*member;
            };
            take("--radial", &Options::radial);
            take("--a", &Options::a);
            take("--axial", &Options::axial);
            take("--L", &Options::L);
            if (active->count("--L") > 0) opt.L_explicit = true;
            take("--D", &Options::D);
            take("--eps", &Options::eps);
            take("--A", &Options::A);
            take("--ordering", &Options::ordering);
            take("--variant", &Options::variant);
            take("--nrho-max", &Options::nrho_max);
            take("--m-max", &Options::m_max);
            take("--nz-max", &Options::nz_max);
            take("--grid-points", &Options::grid_points);
            take("--grid-min", &Options::grid_min);
            take("--grid-max", &Options::grid_max);
            take("--ell", &Options::ell);
            take("--nmax", &Options::nmax);
            take("--format", &Options::format);
            take("--out", &Options::out);
            if (active == verify && verify->count("--target") > 0) opt.target = flags.target;
            if (active == sweep) {
                if (sweep->count("--param") > 0) opt.param = flags.param;
                if (sweep->count("--values") > 0) opt.values = flags.values;
                if (sweep->count("--range") > 0) opt.range = flags.range;
            }
        } else if (opt.command.empty()) {
            throw ConfigError("no command: give a subcommand or a config file with \"command\"");
        }

        if (opt.command == "spectrum") return run_spectrum(opt);
        if (opt.command == "verify") return run_verify(opt);
        if (opt.command == "sweep") return run_sweep(opt);
        throw ConfigError("unknown command: " + opt.command);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const pdm::NonConvergence& e) {
        std::cerr << "eigensolver did not converge: " << e.what() << " ("
                  << e.partial_spectrum.size() << " partial values)\n";
        return kExitDeviation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDeviation;
    }
}

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pdm/verify.hpp"

using namespace pdm;
using std::numbers::pi;

TEST_CASE("verify_axial infinite well passes at modest resolution") {
    const AxialModel model = InfiniteWellAxial(pi);
    const auto report = verify_axial(model, 3, Discretization(0.0, pi, 1200));
    REQUIRE(report.rows.size() == 3);
    CHECK(report.pass());
    CHECK(report.rows[0].analytic_paper.real() == doctest::Approx(1.0));
    CHECK(report.rows[1].analytic_paper.real() == doctest::Approx(4.0));
    CHECK(report.rows[2].analytic_paper.real() == doctest::Approx(9.0));
    for (const auto& row : report.rows) {
        CHECK(row.rel_deviation(FormulaVariant::Paper) < 1e-4);
        CHECK(row.convergence_ratio > 3.5);
        CHECK(row.convergence_ratio < 4.5);
    }
}

TEST_CASE("verify_radial Coulomb adjudicates toward the half-integer offset") {
    const RadialModel model = CoulombRadial{};
    // coarser than the acceptance grid; still decisive
    const auto report =
        verify_radial(model, 0.5, 2, Discretization(1e-3, 250.0, 5000), FormulaVariant::Standard);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.pass());
    CHECK(report.rows[0].analytic_standard.real() == doctest::Approx(-1.0));
    CHECK(report.rows[0].analytic_paper.real() == doctest::Approx(-4.0 / 9.0));
    CHECK(report.rows[0].rel_deviation(FormulaVariant::Standard) < 1e-3);
    CHECK(report.rows[0].rel_deviation(FormulaVariant::Paper) > 0.5);

    // same numbers judged against the paper form: fail status, both tabulated
    const auto paper_judged =
        verify_radial(model, 0.5, 2, Discretization(1e-3, 250.0, 5000), FormulaVariant::Paper);
    CHECK(!paper_judged.pass());
}

TEST_CASE("verify_radial oscillator confirms a(2n + ell + 1)") {
    const RadialModel model = OscillatorRadial(1.0);
    const auto report = verify_radial(model, 1.0, 3, Discretization(1e-3, 20.0, 2000));
    REQUIRE(report.rows.size() == 3);
    CHECK(report.pass());
    CHECK(report.rows[0].analytic_standard.real() == doctest::Approx(2.0));
    CHECK(report.rows[1].analytic_standard.real() == doctest::Approx(4.0));
    CHECK(report.rows[2].analytic_standard.real() == doctest::Approx(6.0));
}

TEST_CASE("verify_axial Morse fails under the paper form and passes standard") {
    const AxialModel model = MorseAxial(25.0, 1.0);
    const auto disc = default_axial_disc(model, 3000);
    const auto standard = verify_axial(model, 3, disc, FormulaVariant::Standard);
    REQUIRE(standard.rows.size() == 3);
    CHECK(standard.pass());
    CHECK(standard.rows[0].analytic_standard.real() == doctest::Approx(-20.25));
    CHECK(standard.rows[0].analytic_paper.real() == doctest::Approx(4.5));

    const auto paper = verify_axial(model, 3, disc, FormulaVariant::Paper);
    CHECK(!paper.pass());
    // both deviations live in the same row set
    CHECK(paper.rows[0].abs_deviation(FormulaVariant::Paper) > 20.0);
    CHECK(paper.rows[0].abs_deviation(FormulaVariant::Standard) < 0.05);
}

TEST_CASE("verify_axial Morse clips beyond the bound-state count") {
    const AxialModel model = MorseAxial(4.0, 1.0); // sqrt(D)/eps = 2: states n = 0, 1
    const auto report = verify_axial(model, 5, default_axial_disc(model, 2000));
    CHECK(report.rows.size() == 2);
    REQUIRE(!report.notes.empty());
    CHECK(report.notes[0].find("clipped") != std::string::npos);
}

TEST_CASE("verify_axial Scarf II: real pair, conjugation-closed spectrum") {
    const AxialModel model = ScarfIIAxial(5.0);
    const auto report = verify_axial(model, 2, default_axial_disc(model, 1200));
    REQUIRE(report.rows.size() == 2);
    CHECK(report.pass());
    CHECK(report.rows[0].analytic_standard.real() == doctest::Approx(-4.0));
    CHECK(report.rows[1].analytic_standard.real() == doctest::Approx(-1.0));
    for (const auto& row : report.rows) CHECK(std::abs(row.numeric.imag()) < 1e-6);
}

TEST_CASE("verify_axial Samsonov reports the missing-state neighborhood") {
    const AxialModel model = SamsonovAxial{};
    const auto report = verify_axial(model, 4, default_axial_disc(model, 1000));
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].index == 1);
    CHECK(report.rows[1].index == 3); // n_z = 2 is skipped in the target list
    CHECK(report.rows[0].analytic_standard.real() == doctest::Approx(0.25));
    CHECK(report.rows[3].analytic_standard.real() == doctest::Approx(6.25));
    CHECK(report.pass());
    bool has_neighborhood_note = false;
    for (const auto& note : report.notes) {
        if (note.find("missing n_z=2") != std::string::npos) has_neighborhood_note = true;
    }
    CHECK(has_neighborhood_note);
}

TEST_CASE("report deviations are recomputed from stored values") {
    const AxialModel model = InfiniteWellAxial(pi);
    auto report = verify_axial(model, 1, Discretization(0.0, pi, 400));
    auto row = report.rows[0];
    const double before = row.abs_deviation(FormulaVariant::Paper);
    row.numeric += 0.5; // mutate the stored value; deviations must follow
    CHECK(row.abs_deviation(FormulaVariant::Paper) == doctest::Approx(0.5 - before).epsilon(1e-6));
}

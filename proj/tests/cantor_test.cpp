#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kneadlab/cantor.hpp"
#include "kneadlab/errors.hpp"
#include "kneadlab/model.hpp"

using namespace kneadlab;

namespace {
const CantorMapSpec F3 = CantorMapSpec::affine(1.0 / 3.0, 2.0 / 3.0);
const CantorMapSpec G4 = CantorMapSpec::affine(1.0 / 4.0, 1.0 / 2.0);
}  // namespace

TEST_CASE("binary coding of base points") {
    const CantorCode zero = cantor_code(F3, 0.0, 6);
    CHECK(zero.in_set());
    CHECK(code_string(zero) == "000000");

    // 1 maps to 0 and stays: letter 1 then zeros.
    CHECK(code_string(cantor_code(F3, 1.0, 6)) == "100000");

    // a is the right end of the left branch: 0 then the code of 1.
    CHECK(code_string(cantor_code(F3, 1.0 / 3.0, 6)) == "010000");
    CHECK(code_string(cantor_code(F3, 2.0 / 3.0, 6)) == "110000");

    const CantorCode gap = cantor_code(F3, 0.5, 6);
    CHECK(!gap.in_set());
    CHECK(gap.gap_at == 0);
    CHECK(code_string(gap) == ">gap");

    const CantorCode one_step = cantor_code(F3, 1.0 / 6.0, 6);
    CHECK(one_step.gap_at == 1);
    CHECK(code_string(one_step) == "0>gap");
}

TEST_CASE("gap words stop at the first central-gap visit") {
    const GapDescriptor gap = find_gap_word(F3, 1.0 / 6.0, 20);
    REQUIRE(gap.word.size() == 1);
    CHECK(gap.word[0] == 0);
    CHECK(gap.gap_value == doctest::Approx(0.5));

    CHECK_THROWS_AS(find_gap_word(F3, 0.0, 20), gap_budget_exceeded);
    CHECK_THROWS_AS(psi_on_cantor(F3, G4, 0.5, 20), not_in_cantor_set);
}

TEST_CASE("coded points transport to the matching nested interval") {
    // The branch fixed points a and b land on the other geometry's a and b.
    CHECK(psi_on_cantor(F3, G4, 1.0 / 3.0, 40).value == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(psi_on_cantor(F3, G4, 2.0 / 3.0, 40).value == doctest::Approx(0.5).epsilon(1e-10));

    const PsiValue shallow = psi_on_cantor(F3, G4, 1.0 / 3.0, 10);
    CHECK(shallow.certified_width > 0.0);
    CHECK(shallow.certified_width <= std::pow(0.5, 8));  // the two 1/2-branches dominate
    CHECK(std::fabs(shallow.value - 0.25) <= 0.5 * shallow.certified_width + 1e-15);
}

TEST_CASE("gap points transport through the central gap") {
    // Center gap: relative position 1/2 of (1/4, 1/2) is 3/8.
    CHECK(psi(F3, G4, 0.5, 40) == doctest::Approx(0.375).epsilon(1e-12));
    // One pull-back through the left branch: 3/8 * 1/4.
    CHECK(psi(F3, G4, 1.0 / 6.0, 40) == doctest::Approx(0.09375).epsilon(1e-12));
    // And through the right branch: 1 - (3/8)/2.
    CHECK(psi(F3, G4, 5.0 / 6.0, 40) == doctest::Approx(0.8125).epsilon(1e-12));
}

TEST_CASE("endpoints are exact and the map is strictly increasing") {
    CHECK(psi(F3, G4, 0.0, 40) == 0.0);
    CHECK(psi(F3, G4, 1.0, 40) == 1.0);

    const std::vector<double> grid = base_grid(F3, 65);
    double prev = -1.0;
    for (double y : grid) {
        const double v = psi(F3, G4, y, 40);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("same-geometry transport is the identity") {
    for (double y : base_grid(F3, 33))
        CHECK(psi(F3, F3, y, 40) == doctest::Approx(y).epsilon(1e-9));
}

TEST_CASE("transport intertwines the inverse branches") {
    const PsiConjugacyReport rep = verify_psi_conjugacy(F3, G4, base_grid(F3, 65), 40);
    CHECK(rep.residual < 1e-9);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kneadlab/analysis.hpp"
#include "kneadlab/equivalence.hpp"
#include "kneadlab/errors.hpp"
#include "kneadlab/fixtures.hpp"
#include "kneadlab/model.hpp"

using namespace kneadlab;

TEST_CASE("one-step cocycle entries on the tent") {
    const ToyModel tent = make_fixture("tent2");
    const CocycleEntries e = cocycle(tent, {SignedCoordinate::regular(0.5), 0.2}, 1);
    CHECK(e.A == doctest::Approx(-2.0));
    CHECK(e.B == 0.0);  // the family ignores y
    CHECK(e.D == doctest::Approx(1.0 / 3.0));
    CHECK(!e.critical_hit);

    const CocycleEntries id = cocycle(tent, {SignedCoordinate::regular(0.5), 0.2}, 0);
    CHECK(id.A == 1.0);
    CHECK(id.B == 0.0);
    CHECK(id.D == 1.0);
}

TEST_CASE("cocycle entries match central finite differences") {
    const ToyModel coupled = make_fixture("coupled");
    const Point p{SignedCoordinate::regular(0.37), 0.21};
    for (std::size_t m : {1u, 2u, 3u}) {
        const CocycleEntries e = cocycle(coupled, p, m);
        const Jacobian2 j = jacobian_fd(coupled, p, m);
        CAPTURE(m);
        CHECK(!j.cell_violation);
        CHECK(j.dxdx == doctest::Approx(e.A).epsilon(1e-5));
        CHECK(j.dxdy == doctest::Approx(e.B).epsilon(1e-5));
        CHECK(std::fabs(j.dydx) < 1e-9);  // lower-left stays zero: skew structure
        CHECK(j.dydy == doctest::Approx(e.D).epsilon(1e-5));
    }
}

TEST_CASE("cocycle composes by the chain rule") {
    const ToyModel coupled = make_fixture("coupled");
    const Point p{SignedCoordinate::regular(-0.4), 0.6};
    const std::size_t m = 2, n = 2;

    const CocycleEntries whole = cocycle(coupled, p, m + n);
    const CocycleEntries first = cocycle(coupled, p, m);
    const Point mid = eval_orbit(coupled, p, m).points.back();
    const CocycleEntries second = cocycle(coupled, mid, n);

    CHECK(whole.A == doctest::Approx(second.A * first.A).epsilon(1e-9));
    CHECK(whole.B == doctest::Approx(second.A * first.B + second.B * first.D).epsilon(1e-9));
    CHECK(whole.D == doctest::Approx(second.D * first.D).epsilon(1e-9));
}

TEST_CASE("critical hits zero the fiber factor and raise the flag") {
    const ToyModel tent = make_fixture("tent2");
    const CocycleEntries direct = cocycle(tent, {SignedCoordinate::zero(Branch::plus), 0.2}, 1);
    CHECK(direct.critical_hit);
    CHECK(direct.A == 0.0);

    // 0.5 lands exactly on the turning point after one step.
    const CocycleEntries later = cocycle(tent, {SignedCoordinate::regular(0.5), 0.2}, 2);
    CHECK(later.critical_hit);
    CHECK(later.A == 0.0);
    CHECK(later.D == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("finite differences notice branch-cell crossings") {
    const ToyModel tent = make_fixture("tent2");
    const Jacobian2 j = jacobian_fd(tent, {SignedCoordinate::regular(1e-7), 0.3}, 1);
    CHECK(j.cell_violation);

    const Jacobian2 id = jacobian_fd(tent, {SignedCoordinate::regular(0.5), 0.3}, 0);
    CHECK(id.dxdx == doctest::Approx(1.0));
    CHECK(id.dydy == doctest::Approx(1.0));
    CHECK(id.dxdy == doctest::Approx(0.0));
    CHECK(id.dydx == doctest::Approx(0.0));
}

TEST_CASE("schwarzian values of the stock families") {
    const ToyModel quad = make_fixture("quad2");
    // c(1 - x^2) - 1 has S = -3 / (2 x^2) regardless of c.
    CHECK(schwarzian(quad.family, 0.3, 0.5) == doctest::Approx(-6.0).epsilon(1e-9));
    CHECK(schwarzian(quad.family, 0.3, 0.25) == doctest::Approx(-24.0).epsilon(1e-9));
    CHECK(std::isinf(schwarzian(quad.family, 0.3, 0.0)));
    CHECK(schwarzian(quad.family, 0.3, 0.0) < 0.0);

    const ToyModel tent = make_fixture("tent2");
    CHECK(schwarzian(tent.family, 0.3, 0.5) == 0.0);

    // -sqrt(|x|) has positive Schwarzian 3 / (8 x^2): 1.5 at x = 1/2.
    const ToyModel g = make_fixture("example3-g");
    CHECK(schwarzian(g.family, 0.3, 0.5) == doctest::Approx(1.5).epsilon(1e-9));

    const std::vector<double> grid = linspace(-1.0, 1.0, 65);
    CHECK(negative_schwarzian(quad.family, 0.3, grid));
    CHECK(!negative_schwarzian(tent.family, 0.3, grid));
    CHECK(!negative_schwarzian(g.family, 0.3, grid));
}

TEST_CASE("composition rule for the schwarzian along fiber chains") {
    const ToyModel low = make_fixture("quad1.2");
    const std::vector<double> grid = linspace(-1.0, 1.0, 33);

    // Single map: both sides reduce to the same expression.
    CHECK(schwarzian_composition_check(low.family, {0.4}, grid) == 0.0);

    const double a = low.cantor.a;
    CHECK(schwarzian_composition_check(low.family, {0.4, 0.4 * a}, grid) < 1e-8);

    const ToyModel coupled = make_fixture("coupled");
    CHECK(schwarzian_composition_check(coupled.family, {0.2, 0.6, 0.9}, grid) < 1e-8);
}

TEST_CASE("interior derivative beats the endpoints on negative-schwarzian arcs") {
    const ToyModel low = make_fixture("quad1.2");
    const PrincipleReport holds =
        minimum_principle_check(low, parse_word("+"), 0.0, 0.2, 0.6);
    CHECK(holds.status == PrincipleStatus::holds);
    CHECK(holds.endpoint_min == doctest::Approx(0.48).epsilon(1e-12));

    const PrincipleReport degenerate =
        minimum_principle_check(low, parse_word("+"), 0.0, -0.5, 0.5);
    CHECK(degenerate.status == PrincipleStatus::precondition_failed);

    // Constant slope: the strict inequality cannot hold.
    const PrincipleReport flat =
        minimum_principle_check(make_fixture("tent2"), parse_word("+"), 0.0, 0.2, 0.6);
    CHECK(flat.status == PrincipleStatus::fails);
}

TEST_CASE("periodic orbits of the full tent up to period two") {
    const std::vector<PeriodicOrbitRecord> records =
        find_periodic_orbits(make_fixture("tent2"), 2);
    REQUIRE(records.size() == 3);

    // Sorted by period then word: "-", "+", "-+".
    CHECK(word_string(records[0].word) == "-");
    CHECK(records[0].y_star == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(records[0].x_star.value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(records[0].multiplier_A == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(records[0].multiplier_D == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(records[0].classification == OrbitClass::repelling);

    CHECK(word_string(records[1].word) == "+");
    CHECK(records[1].y_star == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(records[1].x_star.value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(records[1].multiplier_A == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(records[1].classification == OrbitClass::repelling);

    // Canonical two-cycle representative starts with the minus letter.
    CHECK(word_string(records[2].word) == "-+");
    CHECK(records[2].y_star == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(records[2].x_star.value == doctest::Approx(-0.2).epsilon(1e-9));
    CHECK(records[2].multiplier_A == doctest::Approx(-4.0).epsilon(1e-9));
    CHECK(records[2].multiplier_D == doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
    CHECK(records[2].classification == OrbitClass::repelling);
}

TEST_CASE("the low arc has an attracting fixed point off the turning point") {
    const std::vector<PeriodicOrbitRecord> records =
        find_periodic_orbits(make_fixture("quad1.2"), 1);
    REQUIRE(records.size() == 2);

    CHECK(word_string(records[0].word) == "-");
    CHECK(records[0].x_star.value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(records[0].multiplier_A == doctest::Approx(2.4).epsilon(1e-9));
    CHECK(records[0].classification == OrbitClass::repelling);

    CHECK(word_string(records[1].word) == "+");
    CHECK(records[1].y_star == doctest::Approx(0.0));
    CHECK(records[1].x_star.value == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(records[1].multiplier_A == doctest::Approx(-0.4).epsilon(1e-9));
    CHECK(records[1].classification == OrbitClass::strongly_attracting);
}

TEST_CASE("the three flat-top examples split by fiber multiplier") {
    // -x^2: the turning fixed point has one-sided derivative 0.
    for (const PeriodicOrbitRecord& r : find_periodic_orbits(make_fixture("example3-q"), 1)) {
        if (!r.x_star.is_zero()) continue;
        CHECK(r.classification == OrbitClass::on_critical_line);
        CHECK(r.multiplier_A == 0.0);
    }

    // -|x|: a whole interval of fixed points, one record per grid node, all
    // with |A| = 1; the turning-point copies carry the critical flag.
    const std::vector<PeriodicOrbitRecord> flat =
        find_periodic_orbits(make_fixture("example3-f"), 1);
    CHECK(flat.size() == 130);
    std::size_t on_line = 0;
    for (const PeriodicOrbitRecord& r : flat) {
        CHECK(std::fabs(r.multiplier_A) == doctest::Approx(1.0).epsilon(1e-9));
        if (r.classification == OrbitClass::on_critical_line)
            ++on_line;
        else
            CHECK(r.classification == OrbitClass::neutral);
    }
    CHECK(on_line == 2);

    // -sqrt(|x|): the one-sided derivative diverges at the turning point and
    // the left end is attracting.
    const std::vector<PeriodicOrbitRecord> root =
        find_periodic_orbits(make_fixture("example3-g"), 1);
    REQUIRE(root.size() == 3);
    CHECK(root[0].x_star.value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(root[0].multiplier_A == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(root[0].classification == OrbitClass::strongly_attracting);
    CHECK(root[1].classification == OrbitClass::on_critical_line);
    CHECK(std::isinf(root[1].multiplier_A));
    CHECK(root[2].classification == OrbitClass::on_critical_line);
}

TEST_CASE("exact neutrality is recognized") {
    // c(0) = 1.5 fixes x = 1/3 with multiplier -2 * 1.5 * (1/3) = -1.
    const std::vector<PeriodicOrbitRecord> records =
        find_periodic_orbits(make_fixture("coupled"), 1);
    bool seen = false;
    for (const PeriodicOrbitRecord& r : records) {
        if (word_string(r.word) != "+" || r.x_star.is_zero()) continue;
        seen = true;
        CHECK(r.x_star.value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
        CHECK(r.classification == OrbitClass::neutral);
    }
    CHECK(seen);
}

TEST_CASE("basin probing reaches both obstructions on the low arc") {
    const ToyModel low = make_fixture("quad1.2");
    const std::vector<PeriodicOrbitRecord> records = find_periodic_orbits(low, 1);
    REQUIRE(records.size() == 2);
    const PeriodicOrbitRecord& attracting = records[1];
    REQUIRE(attracting.classification == OrbitClass::strongly_attracting);

    const BasinReport rep = singer_check(low, attracting, 10000);
    CHECK(rep.conclusive);
    CHECK(rep.lo < 0.0);
    CHECK(rep.hi > attracting.x_star.value);
    CHECK(rep.touches_critical_line);  // interval closure contains the turning point
    CHECK(rep.touches_boundary);
    CHECK(rep.lo <= -1.0 + 1e-4);
    CHECK(rep.hi >= 1.0 - 1e-4);

    CHECK_THROWS_AS(static_cast<void>(singer_check(low, records[0], 100)),
                    precondition_violation);
}

TEST_CASE("basin of a boundary attractor reports the boundary touch") {
    const ToyModel g = make_fixture("example3-g");
    const std::vector<PeriodicOrbitRecord> records = find_periodic_orbits(g, 1);
    REQUIRE(!records.empty());
    REQUIRE(records[0].classification == OrbitClass::strongly_attracting);

    const BasinReport rep = singer_check(g, records[0], 10000);
    CHECK(rep.conclusive);
    CHECK(rep.lo == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(rep.touches_boundary);
}

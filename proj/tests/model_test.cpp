#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kneadlab/fixtures.hpp"
#include "kneadlab/model.hpp"

using namespace kneadlab;

TEST_CASE("signed coordinate order splits the doubled zero") {
    const SignedCoordinate neg = SignedCoordinate::regular(-0.5);
    const SignedCoordinate zm = SignedCoordinate::zero(Branch::minus);
    const SignedCoordinate zp = SignedCoordinate::zero(Branch::plus);
    const SignedCoordinate pos = SignedCoordinate::regular(0.5);

    CHECK(neg < zm);
    CHECK(zm < zp);
    CHECK(zp < pos);
    CHECK(!(zp < zm));
    CHECK(zm == SignedCoordinate::zero(Branch::minus));
    CHECK(!(zm == zp));
    CHECK(coordinate_string(zm) == "0-");
    CHECK(coordinate_string(zp) == "0+");
}

TEST_CASE("snapping tags near-zero values with the given branch") {
    const SignedCoordinate snapped = SignedCoordinate::snapped(3e-13, Branch::minus, 1e-12);
    CHECK(snapped.is_zero());
    CHECK(snapped.value == 0.0);
    CHECK(snapped.zero_sign == Branch::minus);

    const SignedCoordinate kept = SignedCoordinate::snapped(1e-3, Branch::minus, 1e-12);
    CHECK(!kept.is_zero());
    CHECK(kept.value == doctest::Approx(1e-3));
}

TEST_CASE("fiber families evaluate to the expected arcs") {
    const ToyModel tent = make_fixture("tent2");
    CHECK(tent.family.eval(0.2, 0.3) == doctest::Approx(0.4));
    CHECK(tent.family.eval(0.9, -0.3) == doctest::Approx(0.4));
    CHECK(tent.family.eval(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(tent.family.eval(0.0, 1.0) == doctest::Approx(-1.0));
    CHECK(tent.family.eval(0.0, -1.0) == doctest::Approx(-1.0));

    const ToyModel quad = make_fixture("quad2");
    CHECK(quad.family.eval(0.5, 0.5) == doctest::Approx(0.5));
    CHECK(quad.family.eval(0.5, 0.0) == doctest::Approx(1.0));
    CHECK(quad.family.eval(0.5, -1.0) == doctest::Approx(-1.0));

    const ToyModel q = make_fixture("example3-q");
    const ToyModel f = make_fixture("example3-f");
    const ToyModel g = make_fixture("example3-g");
    CHECK(q.family.eval(0.1, 0.5) == doctest::Approx(-0.25));
    CHECK(f.family.eval(0.1, -0.5) == doctest::Approx(-0.5));
    CHECK(g.family.eval(0.1, 0.25) == doctest::Approx(-0.5));

    // c(y) = 1.5 + 0.4 y, so the fiber at y = 0.5 has c = 1.7.
    const ToyModel coupled = make_fixture("coupled");
    CHECK(coupled.family.eval(0.5, 0.5) == doctest::Approx(1.7 * 0.75 - 1.0));
}

TEST_CASE("one-sided derivatives at the turning point") {
    const ToyModel tent = make_fixture("tent2");
    CHECK(tent.family.deriv_x_from(0.3, 0.0, Branch::minus) == doctest::Approx(2.0));
    CHECK(tent.family.deriv_x_from(0.3, 0.0, Branch::plus) == doctest::Approx(-2.0));

    const ToyModel quad = make_fixture("quad2");
    CHECK(quad.family.deriv_x(0.3, 0.25) == doctest::Approx(-1.0));
    CHECK(quad.family.deriv_x_from(0.3, 0.0, Branch::plus) == 0.0);
    CHECK(quad.family.deriv_x2(0.3, 0.25) == doctest::Approx(-4.0));
    CHECK(quad.family.deriv_x3(0.3, 0.25) == 0.0);

    const ToyModel g = make_fixture("example3-g");
    CHECK(std::isinf(g.family.deriv_x_from(0.3, 0.0, Branch::plus)));
}

TEST_CASE("affine base map: branches, gap, round trips") {
    const CantorMapSpec spec = CantorMapSpec::affine(1.0 / 3.0, 2.0 / 3.0);
    CHECK(spec.k(0.0) == doctest::Approx(0.0));
    CHECK(spec.k(1.0) == doctest::Approx(0.0));
    CHECK(spec.k(1.0 / 3.0) == doctest::Approx(1.0));
    CHECK(spec.k(2.0 / 3.0) == doctest::Approx(1.0));
    CHECK(spec.k(1.0 / 6.0) == doctest::Approx(0.5));
    CHECK(spec.k(5.0 / 6.0) == doctest::Approx(0.5));
    CHECK(spec.in_gap(0.5));
    CHECK(!spec.in_gap(0.2));

    CHECK(spec.K(Branch::plus, 0.6) == doctest::Approx(0.2));
    CHECK(spec.K(Branch::minus, 0.6) == doctest::Approx(0.8));
    for (double z : {0.0, 0.25, 0.7, 1.0}) {
        CHECK(spec.k(spec.K(Branch::plus, z)) == doctest::Approx(z));
        CHECK(spec.k(spec.K(Branch::minus, z)) == doctest::Approx(z));
    }

    CHECK(spec.k_prime(0.2) == doctest::Approx(3.0));
    CHECK(spec.k_prime(0.8) == doctest::Approx(-3.0));
    CHECK(spec.K_prime(Branch::plus, 0.4) == doctest::Approx(1.0 / 3.0));
    CHECK(spec.K_prime(Branch::minus, 0.4) == doctest::Approx(-1.0 / 3.0));
    CHECK(spec.expansion_bound() == doctest::Approx(2.999997));
}

TEST_CASE("one step applies the branch named by the sign of x") {
    const ToyModel tent = make_fixture("tent2");

    const Point from_right = eval_step(tent, {SignedCoordinate::regular(0.5), 0.2});
    CHECK(from_right.x.is_zero());
    CHECK(from_right.x.zero_sign == Branch::plus);  // image tagged by the branch just applied
    CHECK(from_right.y == doctest::Approx(0.2 / 3.0));

    const Point from_left = eval_step(tent, {SignedCoordinate::regular(-0.25), 0.3});
    CHECK(from_left.x.value == doctest::Approx(0.5));
    CHECK(from_left.y == doctest::Approx(0.9));  // K_-(0.3) = 1 - 0.1

    const Point from_zero = eval_step(tent, {SignedCoordinate::zero(Branch::minus), 0.3});
    CHECK(from_zero.x.value == doctest::Approx(1.0));
    CHECK(from_zero.y == doctest::Approx(0.9));
}

TEST_CASE("orbit records the branch word alongside the points") {
    const ToyModel tent = make_fixture("tent2");
    const Orbit orbit = eval_orbit(tent, {SignedCoordinate::regular(0.5), 0.2}, 3);
    REQUIRE(orbit.points.size() == 4);
    REQUIRE(orbit.word.size() == 3);
    CHECK(orbit.word[0] == Branch::plus);
    CHECK(orbit.word[1] == Branch::plus);  // the tagged zero follows its own side
    CHECK(orbit.points[1].x.is_zero());
    CHECK(orbit.points[2].x.value == doctest::Approx(1.0));
    CHECK(orbit.points[3].x.value == doctest::Approx(-1.0));
}

TEST_CASE("branch inverses by bisection hit the analytic preimages") {
    const ToyModel tent = make_fixture("tent2");
    // 1 - 2|t| = 0 at t = -1/2 and t = 1/2.
    CHECK(branch_inverse(tent, Branch::minus, 0.0, 0.4).value == doctest::Approx(-0.5));
    CHECK(branch_inverse(tent, Branch::plus, 0.0, 0.4).value == doctest::Approx(0.5));

    const ToyModel quad = make_fixture("quad2");
    // 1 - 2t^2 = 0 at t = -+1/sqrt(2).
    CHECK(branch_inverse(quad, Branch::minus, 0.0, 0.4).value ==
          doctest::Approx(-std::sqrt(0.5)).epsilon(1e-10));
    CHECK(branch_inverse(quad, Branch::plus, 0.0, 0.4).value ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));

    // The top of the arc pulls back to the turning point itself.
    const SignedCoordinate top = branch_inverse(tent, Branch::plus, 1.0, 0.4);
    CHECK(top.is_zero());
    CHECK(top.zero_sign == Branch::plus);

    // Values above the arc have no preimage; the checked form says so.
    const BranchInverseResult miss = branch_inverse_checked(tent, Branch::minus, 1.5, 0.4);
    CHECK(!miss.exists);
    CHECK(miss.x.is_zero());

    // quad1.2 tops out at c - 1 = 0.2, so 0.4 is unreachable on either side.
    const ToyModel low = make_fixture("quad1.2");
    CHECK(!branch_inverse_checked(low, Branch::plus, 0.4, 0.1).exists);
}

TEST_CASE("validation passes every built-in fixture") {
    for (const std::string& name : fixture_names()) {
        const ValidationReport report = validate_model(make_fixture(name));
        CAPTURE(name);
        for (const ValidationCheck& c : report.checks) {
            CAPTURE(c.name);
            CAPTURE(c.note);
            CHECK(c.pass);
        }
        CHECK(report.pass);
    }
}

TEST_CASE("validation flags broken base maps instead of throwing") {
    ModelDescriptor bad;
    bad.family_kind = "tent";
    bad.a = 0.7;
    bad.b = 0.3;  // branch intervals out of order
    bad.name = "bad-structure";
    const ValidationReport report = validate_model(make_model(bad));
    CHECK(!report.pass);

    ModelDescriptor overclaim;
    overclaim.family_kind = "tent";
    overclaim.gamma = 5.0;  // claims more expansion than the slopes provide
    overclaim.name = "overclaimed-gamma";
    const ValidationReport r2 = validate_model(make_model(overclaim));
    bool expansion_failed = false;
    for (const ValidationCheck& c : r2.checks)
        if (c.name == "cantor/expansion") expansion_failed = !c.pass;
    CHECK(expansion_failed);
    CHECK(!r2.pass);
}

TEST_CASE("grids hit endpoints exactly and include the base break points") {
    const std::vector<double> ls = linspace(0.0, 1.0, 5);
    REQUIRE(ls.size() == 5);
    CHECK(ls.front() == 0.0);
    CHECK(ls.back() == 1.0);
    CHECK(ls[2] == doctest::Approx(0.5));

    const CantorMapSpec spec = CantorMapSpec::affine(1.0 / 3.0, 2.0 / 3.0);
    const std::vector<double> grid = base_grid(spec, 33);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 1.0);
    bool has_a = false, has_b = false;
    for (double y : grid) {
        has_a = has_a || y == spec.a;
        has_b = has_b || y == spec.b;
    }
    CHECK(has_a);
    CHECK(has_b);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i - 1] < grid[i]);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneadlab/fixtures.hpp"
#include "kneadlab/model.hpp"
#include "kneadlab/symbolic.hpp"

using namespace kneadlab;

TEST_CASE("addresses name the four symbol classes") {
    CHECK(address({SignedCoordinate::regular(-0.3), 0.1}) == AddressSymbol::L);
    CHECK(address({SignedCoordinate::zero(Branch::minus), 0.1}) == AddressSymbol::Zminus);
    CHECK(address({SignedCoordinate::zero(Branch::plus), 0.1}) == AddressSymbol::Zplus);
    CHECK(address({SignedCoordinate::regular(0.3), 0.1}) == AddressSymbol::R);
    CHECK(symbol_string(AddressSymbol::Zminus) == "0-");
}

TEST_CASE("tent itinerary falls onto the fixed left end") {
    const ToyModel tent = make_fixture("tent2");
    // 0.5 -> 0 (tagged +) -> 1 -> -1 -> -1.
    const Itinerary it = itinerary(tent, {SignedCoordinate::regular(0.5), 0.2}, 5);
    CHECK(itinerary_string(it) == "R,0+,R,L,L");
}

TEST_CASE("kneading sequence of the doubled turning point") {
    const ToyModel tent = make_fixture("tent2");
    CHECK(itinerary_string(kneading(tent, 0.4, Branch::plus, 5)) == "0+,R,L,L,L");
    CHECK(itinerary_string(kneading(tent, 0.4, Branch::minus, 5)) == "0-,R,L,L,L");

    // The full quadratic arc shares the tent's kneading data.
    const ToyModel quad = make_fixture("quad2");
    CHECK(itinerary_string(kneading(quad, 0.7, Branch::plus, 5)) == "0+,R,L,L,L");

    // At c = 1.2 the turning point's orbit never leaves the right half.
    const ToyModel low = make_fixture("quad1.2");
    CHECK(itinerary_string(kneading(low, 0.4, Branch::plus, 5)) == "0+,R,R,R,R");
}

TEST_CASE("fixed turning point repeats its own symbol") {
    for (const char* name : {"example3-q", "example3-f", "example3-g"}) {
        const ToyModel m = make_fixture(name);
        CAPTURE(name);
        CHECK(itinerary_string(kneading(m, 0.25, Branch::plus, 4)) == "0+,0+,0+,0+");
        CHECK(itinerary_string(kneading(m, 0.25, Branch::minus, 4)) == "0-,0-,0-,0-");
    }
}

TEST_CASE("kneading comparison across the base conjugacy") {
    const ToyModel tent = make_fixture("tent2");
    const ToyModel quad = make_fixture("quad2");
    const std::vector<double> grid = base_grid(tent.cantor, 17);

    const EquivalenceVerdict same = kneading_equal(tent, quad, grid, 16);
    CHECK(same.equal);
    CHECK(same.depth == 16);
    CHECK(same.grid_size == grid.size());
    CHECK(!same.mismatch.has_value());

    const ToyModel low = make_fixture("quad1.2");
    const EquivalenceVerdict diff = kneading_equal(tent, low, grid, 16);
    REQUIRE(!diff.equal);
    REQUIRE(diff.mismatch.has_value());
    // First fiber, minus side scanned first; sequences split at the third
    // symbol: the tent turning point has already landed on the left end
    // while the low arc is still on the right.
    CHECK(diff.mismatch->y_index == 0);
    CHECK(diff.mismatch->side == Branch::minus);
    CHECK(diff.mismatch->symbol_index == 2);
    CHECK(diff.mismatch->lhs == AddressSymbol::L);
    CHECK(diff.mismatch->rhs == AddressSymbol::R);
}

TEST_CASE("the three flat-top examples share kneading data everywhere") {
    const ToyModel q = make_fixture("example3-q");
    const ToyModel f = make_fixture("example3-f");
    const ToyModel g = make_fixture("example3-g");
    const std::vector<double> grid = base_grid(q.cantor, 9);
    CHECK(kneading_equal(q, f, grid, 32).equal);
    CHECK(kneading_equal(f, g, grid, 32).equal);
    CHECK(kneading_equal(g, q, grid, 32).equal);
}

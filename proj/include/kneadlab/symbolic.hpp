#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kneadlab/model.hpp"

namespace kneadlab {

// Four-symbol address alphabet {L, 0-, 0+, R}.
enum class AddressSymbol { L, Zminus, Zplus, R };

std::string symbol_string(AddressSymbol s);  // "L", "0-", "0+", "R"

struct Itinerary {
    std::vector<AddressSymbol> symbols;
    std::size_t depth() const { return symbols.size(); }
};

std::string itinerary_string(const Itinerary& it);  // symbols joined by commas

AddressSymbol address(const Point& p);

// Symbol i is the address of the i-th image of p, i = 0..depth-1.
Itinerary itinerary(const ToyModel& model, const Point& p, std::size_t depth);

// Itinerary of the critical point 0^side on fiber y.
Itinerary kneading(const ToyModel& model, double y, Branch side, std::size_t depth);

struct KneadingMismatch {
    std::size_t y_index = 0;
    Branch side = Branch::minus;
    std::size_t symbol_index = 0;
    double y = 0.0;
    double psi_y = 0.0;
    AddressSymbol lhs = AddressSymbol::L;  // first model's symbol
    AddressSymbol rhs = AddressSymbol::L;  // second model's symbol at psi(y)
};

struct EquivalenceVerdict {
    bool equal = false;
    std::size_t depth = 0;
    std::size_t grid_size = 0;
    std::optional<KneadingMismatch> mismatch;  // first in (y index, side, symbol) order
};

// Compares the critical itineraries of F on each grid fiber with those of G
// on the psi-image fiber, both sides, to the given depth. The base conjugacy
// psi is built from the two Cantor specs at depth psi_depth. Sides are
// scanned minus before plus; the reported mismatch is the first one.
EquivalenceVerdict kneading_equal(const ToyModel& F, const ToyModel& G,
                                  const std::vector<double>& y_grid, std::size_t depth,
                                  std::size_t psi_depth = 40);

}  // namespace kneadlab

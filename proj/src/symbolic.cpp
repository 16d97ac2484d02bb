#include "kneadlab/symbolic.hpp"

#include "kneadlab/cantor.hpp"

namespace kneadlab {

std::string symbol_string(AddressSymbol s) {
    switch (s) {
        case AddressSymbol::L: return "L";
        case AddressSymbol::Zminus: return "0-";
        case AddressSymbol::Zplus: return "0+";
        case AddressSymbol::R: return "R";
    }
    return "?";
}

std::string itinerary_string(const Itinerary& it) {
    std::string s;
    for (std::size_t i = 0; i < it.symbols.size(); ++i) {
        if (i) s += ',';
        s += symbol_string(it.symbols[i]);
    }
    return s;
}

AddressSymbol address(const Point& p) {
    if (p.x.is_zero())
        return *p.x.zero_sign == Branch::minus ? AddressSymbol::Zminus : AddressSymbol::Zplus;
    return p.x.value < 0.0 ? AddressSymbol::L : AddressSymbol::R;
}

Itinerary itinerary(const ToyModel& model, const Point& p, std::size_t depth) {
    Itinerary it;
    it.symbols.reserve(depth);
    Point cur = p;
    for (std::size_t i = 0; i < depth; ++i) {
        it.symbols.push_back(address(cur));
        if (i + 1 < depth) cur = eval_step(model, cur);
    }
    return it;
}

Itinerary kneading(const ToyModel& model, double y, Branch side, std::size_t depth) {
    return itinerary(model, Point{SignedCoordinate::zero(side), y}, depth);
}

EquivalenceVerdict kneading_equal(const ToyModel& F, const ToyModel& G,
                                  const std::vector<double>& y_grid, std::size_t depth,
                                  std::size_t psi_depth) {
    EquivalenceVerdict verdict;
    verdict.depth = depth;
    verdict.grid_size = y_grid.size();
    for (std::size_t yi = 0; yi < y_grid.size(); ++yi) {
        const double y = y_grid[yi];
        const double py = psi(F.cantor, G.cantor, y, psi_depth);
        for (Branch side : {Branch::minus, Branch::plus}) {
            const Itinerary lhs = kneading(F, y, side, depth);
            const Itinerary rhs = kneading(G, py, side, depth);
            for (std::size_t s = 0; s < depth; ++s) {
                if (lhs.symbols[s] != rhs.symbols[s]) {
                    verdict.equal = false;
                    verdict.mismatch = KneadingMismatch{yi,  side,           s,
                                                        y,   py,             lhs.symbols[s],
                                                        rhs.symbols[s]};
                    return verdict;
                }
            }
        }
    }
    verdict.equal = true;
    return verdict;
}

}  // namespace kneadlab

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kneadlab/model.hpp"

namespace kneadlab {

// Binary itinerary of a base point under k. Letter 0 means the branch over
// [0,a], letter 1 the branch over [b,1]. When the orbit falls into the open
// gap (a,b) at step s, gap_at = s and the letters from s on are padding.
struct CantorCode {
    std::vector<int> word;
    std::optional<std::size_t> gap_at;
    bool in_set() const { return !gap_at.has_value(); }
};

std::string code_string(const CantorCode& code, std::size_t max_letters = 48);

CantorCode cantor_code(const CantorMapSpec& spec, double y, std::size_t depth);

// Minimal branch route from y into the central gap: applying k along word
// lands in (a,b). Empty word when y is already in the gap.
struct GapDescriptor {
    std::vector<int> word;
    double gap_value = 0.0;  // the image in (a,b)
};

// Throws gap_budget_exceeded when y does not fall into the gap within budget
// steps (deep Cantor-set points never do).
GapDescriptor find_gap_word(const CantorMapSpec& spec, double y, std::size_t budget);

struct PsiValue {
    double value = 0.0;
    double certified_width = 0.0;  // nested-interval width; 0 on the exact routes
    CantorCode code;
};

// Point of the G Cantor set with the same binary code as y, evaluated as the
// midpoint of the depth-step nested interval. Requires y coded to depth.
PsiValue psi_on_cantor(const CantorMapSpec& F, const CantorMapSpec& G, double y,
                       std::size_t depth);

// Increasing bijection of [0,1] transported onto the central gaps; identity
// when empty. The default (affine) choice is canonical and reproducible.
using GapHomeomorphism = std::function<double(double)>;

// Total base conjugacy: coded points go through psi_on_cantor; gap points go
// forward along their gap word, through h on the central gap, and back
// through the G inverse branches. psi(0) = 0 and psi(1) = 1 exactly.
PsiValue psi_extended(const CantorMapSpec& F, const CantorMapSpec& G, double y,
                      std::size_t depth, const GapHomeomorphism& h = {});

// Convenience: value only.
double psi(const CantorMapSpec& F, const CantorMapSpec& G, double y, std::size_t depth);

struct PsiConjugacyReport {
    double residual = 0.0;  // max |psi(K^F_j(y)) - K^G_j(psi(y))|
    double worst_y = 0.0;
    Branch worst_side = Branch::minus;
};

PsiConjugacyReport verify_psi_conjugacy(const CantorMapSpec& F, const CantorMapSpec& G,
                                        const std::vector<double>& grid, std::size_t depth);

}  // namespace kneadlab

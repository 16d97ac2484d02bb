#include "kneadlab/cantor.hpp"

#include <algorithm>
#include <cmath>

#include "kneadlab/errors.hpp"

namespace kneadlab {

std::string code_string(const CantorCode& code, std::size_t max_letters) {
    std::string s;
    const std::size_t shown =
        code.gap_at ? std::min(*code.gap_at, max_letters) : std::min(code.word.size(), max_letters);
    for (std::size_t i = 0; i < shown; ++i) s += code.word[i] ? '1' : '0';
    if (code.gap_at) s += ">gap";
    return s;
}

CantorCode cantor_code(const CantorMapSpec& spec, double y, std::size_t depth) {
    CantorCode code;
    code.word.assign(depth, 0);
    double t = y;
    for (std::size_t i = 0; i < depth; ++i) {
        if (spec.in_gap(t)) {
            code.gap_at = i;
            return code;
        }
        code.word[i] = t >= spec.b ? 1 : 0;
        t = spec.k(t);
    }
    return code;
}

GapDescriptor find_gap_word(const CantorMapSpec& spec, double y, std::size_t budget) {
    GapDescriptor gap;
    double t = y;
    for (std::size_t i = 0; i <= budget; ++i) {
        if (spec.in_gap(t)) {
            gap.gap_value = t;
            return gap;
        }
        if (i == budget) break;
        gap.word.push_back(t >= spec.b ? 1 : 0);
        t = spec.k(t);
    }
    throw gap_budget_exceeded("no gap route within the depth budget");
}

namespace {

Branch letter_branch(int letter) { return letter == 0 ? Branch::plus : Branch::minus; }

// Nested interval of the given code in the G geometry, innermost first.
void nested_interval(const CantorMapSpec& G, const std::vector<int>& word, std::size_t depth,
                     double& lo, double& hi) {
    lo = 0.0;
    hi = 1.0;
    for (std::size_t i = depth; i-- > 0;) {
        const Branch j = letter_branch(word[i]);
        const double e0 = G.K(j, lo);
        const double e1 = G.K(j, hi);
        lo = std::min(e0, e1);
        hi = std::max(e0, e1);
    }
}

}  // namespace

PsiValue psi_on_cantor(const CantorMapSpec& F, const CantorMapSpec& G, double y,
                       std::size_t depth) {
    PsiValue out;
    out.code = cantor_code(F, y, depth);
    if (!out.code.in_set())
        throw not_in_cantor_set("point is not coded to the requested depth");
    double lo, hi;
    nested_interval(G, out.code.word, depth, lo, hi);
    out.value = 0.5 * (lo + hi);
    out.certified_width = hi - lo;
    return out;
}

PsiValue psi_extended(const CantorMapSpec& F, const CantorMapSpec& G, double y,
                      std::size_t depth, const GapHomeomorphism& h) {
    // The codes of the fixed endpoints are 000... and 1000...; their images
    // are the exact endpoints of the G set.
    if (y == 0.0 || y == 1.0) {
        PsiValue out;
        out.value = y;
        out.certified_width = 0.0;
        out.code = cantor_code(F, y, depth);
        return out;
    }

    PsiValue out;
    out.code = cantor_code(F, y, depth);
    if (out.code.in_set()) {
        double lo, hi;
        nested_interval(G, out.code.word, depth, lo, hi);
        out.value = 0.5 * (lo + hi);
        out.certified_width = hi - lo;
        return out;
    }

    // Gap route: forward along the word into (a_F, b_F), across through h,
    // back through the G inverse branches. Exact up to rounding.
    const GapDescriptor gap = find_gap_word(F, y, depth);
    const double u = (gap.gap_value - F.a) / (F.b - F.a);
    const double v = h ? h(u) : u;
    double g = G.a + (G.b - G.a) * v;
    for (std::size_t i = gap.word.size(); i-- > 0;) g = G.K(letter_branch(gap.word[i]), g);
    out.value = g;
    out.certified_width = 0.0;
    return out;
}

double psi(const CantorMapSpec& F, const CantorMapSpec& G, double y, std::size_t depth) {
    return psi_extended(F, G, y, depth).value;
}

PsiConjugacyReport verify_psi_conjugacy(const CantorMapSpec& F, const CantorMapSpec& G,
                                        const std::vector<double>& grid, std::size_t depth) {
    PsiConjugacyReport rep;
    for (double y : grid) {
        const double py = psi(F, G, y, depth);
        for (Branch j : {Branch::minus, Branch::plus}) {
            const double lhs = psi(F, G, F.K(j, y), depth);
            const double rhs = G.K(j, py);
            const double r = std::fabs(lhs - rhs);
            if (r > rep.residual) {
                rep.residual = r;
                rep.worst_y = y;
                rep.worst_side = j;
            }
        }
    }
    return rep;
}

}  // namespace kneadlab

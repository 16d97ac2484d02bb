#include "kneadlab/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "kneadlab/cantor.hpp"
#include "kneadlab/errors.hpp"
#include "kneadlab/symbolic.hpp"

namespace kneadlab {

std::string word_string(const BranchWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Branch j : w) s += branch_char(j);
    return s;
}

BranchWord parse_word(const std::string& s) {
    BranchWord w;
    w.reserve(s.size());
    for (char c : s) w.push_back(branch_from_char(c));
    return w;
}

bool word_less(const BranchWord& lhs, const BranchWord& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

PointLabel PointLabel::boundary(Branch side) { return {Kind::boundary, side, {}}; }
PointLabel PointLabel::critical(Branch side) { return {Kind::critical, side, {}}; }
PointLabel PointLabel::preimage(BranchWord w) {
    return {Kind::preimage, Branch::minus, std::move(w)};
}

std::string label_string(const PointLabel& label) {
    switch (label.kind) {
        case PointLabel::Kind::boundary: return label.side == Branch::minus ? "-1" : "+1";
        case PointLabel::Kind::critical: return label.side == Branch::minus ? "0-" : "0+";
        case PointLabel::Kind::preimage: return word_string(label.word);
    }
    return "?";
}

bool label_less(const PointLabel& lhs, const PointLabel& rhs) {
    if (lhs.kind != rhs.kind) return static_cast<int>(lhs.kind) < static_cast<int>(rhs.kind);
    switch (lhs.kind) {
        case PointLabel::Kind::boundary:
        case PointLabel::Kind::critical:
            return lhs.side < rhs.side;
        case PointLabel::Kind::preimage:
            return word_less(lhs.word, rhs.word);
    }
    return false;
}

bool label_equal(const PointLabel& lhs, const PointLabel& rhs) {
    return !label_less(lhs, rhs) && !label_less(rhs, lhs);
}

ChainResult pullback_chain(const ToyModel& model, const BranchWord& word, double y) {
    // Base fibers visited by the chain: fiber i hosts the inverse of letter i.
    std::vector<double> fibers(word.size());
    fibers[0] = y;
    for (std::size_t i = 1; i < word.size(); ++i)
        fibers[i] = model.cantor.K(word[i - 1], fibers[i - 1]);

    ChainResult out;
    out.x = SignedCoordinate::zero(word.back());
    for (std::size_t i = word.size(); i-- > 0;) {
        const BranchInverseResult step =
            branch_inverse_checked(model, word[i], out.x.value, fibers[i]);
        out.x = step.x;
        out.fell_back = out.fell_back || !step.exists;
    }
    return out;
}

namespace {

// True when the two computed points coincide as partition points. The two
// signed zeros stay distinct; tagged and untagged points never merge (any
// value within snapping distance of 0 is already tagged).
bool same_point(const SignedCoordinate& lhs, const SignedCoordinate& rhs, double tol) {
    if (lhs.is_zero() || rhs.is_zero())
        return lhs.is_zero() && rhs.is_zero() && *lhs.zero_sign == *rhs.zero_sign;
    return std::fabs(lhs.value - rhs.value) <= tol;
}

}  // namespace

FiberPartition preimage_set(const ToyModel& model, double y, std::size_t n) {
    FiberPartition part;
    part.y = y;
    part.n = n;

    std::vector<LabeledPreimage> found;
    found.push_back({PointLabel::critical(Branch::minus), SignedCoordinate::zero(Branch::minus), y});
    found.push_back({PointLabel::critical(Branch::plus), SignedCoordinate::zero(Branch::plus), y});

    // Words in shortlex order so the first of two coincident points carries
    // the preferred label.
    std::vector<BranchWord> level = {{}};
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<BranchWord> next;
        next.reserve(level.size() * 2);
        for (const BranchWord& w : level) {
            for (Branch j : {Branch::minus, Branch::plus}) {
                BranchWord ext = w;
                ext.push_back(j);
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
        for (const BranchWord& w : level) {
            const ChainResult chain = pullback_chain(model, w, y);
            if (chain.fell_back) continue;
            found.push_back({PointLabel::preimage(w), chain.x, y});
        }
    }

    const double tol = 10.0 * model.tol.root_tol;
    std::vector<LabeledPreimage> unique;
    for (const LabeledPreimage& cand : found) {
        bool dup = false;
        for (const LabeledPreimage& kept : unique) {
            if (same_point(kept.x, cand.x, tol)) {
                dup = true;  // earlier entry has the shorter/smaller label
                break;
            }
        }
        if (!dup) unique.push_back(cand);
    }

    unique.push_back({PointLabel::boundary(Branch::minus), SignedCoordinate::regular(-1.0), y});
    unique.push_back({PointLabel::boundary(Branch::plus), SignedCoordinate::regular(1.0), y});
    std::stable_sort(unique.begin(), unique.end(),
                     [](const LabeledPreimage& lhs, const LabeledPreimage& rhs) {
                         return lhs.x < rhs.x;
                     });
    part.points = std::move(unique);
    return part;
}

namespace {

// Kneading agreement along every fiber the depth-n enumeration visits.
void check_kneading_on_fiber_tree(const ToyModel& F, const ToyModel& G, double y, std::size_t n,
                                  std::size_t psi_depth) {
    std::vector<std::pair<BranchWord, double>> fibers = {{{}, y}};
    for (std::size_t depth = 0; depth < n; ++depth) {
        std::vector<std::pair<BranchWord, double>> next;
        for (const auto& [route, u] : fibers) {
            const double pu = psi(F.cantor, G.cantor, u, psi_depth);
            for (Branch side : {Branch::minus, Branch::plus}) {
                const Itinerary lhs = kneading(F, u, side, n);
                const Itinerary rhs = kneading(G, pu, side, n);
                for (std::size_t s = 0; s < n; ++s) {
                    if (lhs.symbols[s] != rhs.symbols[s]) {
                        throw combinatorial_inequivalence(
                            "kneading sequences disagree at depth " + std::to_string(s) +
                                " on the fiber reached by \"" + word_string(route) + "\"",
                            word_string(route));
                    }
                }
            }
            if (depth + 1 < n) {
                for (Branch j : {Branch::minus, Branch::plus}) {
                    BranchWord ext = route;
                    ext.push_back(j);
                    next.push_back({std::move(ext), F.cantor.K(j, u)});
                }
            }
        }
        fibers = std::move(next);
    }
}

}  // namespace

ConjugacyTable build_Hn(const ToyModel& F, const ToyModel& G, double y, std::size_t n,
                        std::size_t psi_depth) {
    check_kneading_on_fiber_tree(F, G, y, n, psi_depth);

    ConjugacyTable table;
    table.y = y;
    table.n = n;
    table.psi_y = psi(F.cantor, G.cantor, y, psi_depth);

    const FiberPartition pf = preimage_set(F, y, n);
    const FiberPartition pg = preimage_set(G, table.psi_y, n);

    // Match by label; scan the shortlex-sorted union so the first offending
    // label is deterministic.
    auto by_label = [](const FiberPartition& part) {
        std::vector<const LabeledPreimage*> v;
        for (const LabeledPreimage& p : part.points) v.push_back(&p);
        std::sort(v.begin(), v.end(), [](const LabeledPreimage* lhs, const LabeledPreimage* rhs) {
            return label_less(lhs->label, rhs->label);
        });
        return v;
    };
    const auto lf = by_label(pf);
    const auto lg = by_label(pg);
    std::size_t i = 0, j = 0;
    while (i < lf.size() || j < lg.size()) {
        if (i < lf.size() && j < lg.size() && label_equal(lf[i]->label, lg[j]->label)) {
            ++i;
            ++j;
            continue;
        }
        const PointLabel& missing = (j >= lg.size() || (i < lf.size() && label_less(lf[i]->label, lg[j]->label)))
                                        ? lf[i]->label
                                        : lg[j]->label;
        throw combinatorial_inequivalence(
            "label sets differ at depth " + std::to_string(n) + ": \"" + label_string(missing) +
                "\" is present on one side only",
            label_string(missing));
    }

    // Both partitions are x-sorted; identical label sets must pair in order.
    for (std::size_t idx = 0; idx < pf.points.size(); ++idx) {
        if (!label_equal(pf.points[idx].label, pg.points[idx].label)) {
            throw combinatorial_inequivalence(
                "pairing is not order-preserving at label \"" +
                    label_string(pf.points[idx].label) + "\"",
                label_string(pf.points[idx].label));
        }
        table.pairs.push_back({pf.points[idx].label, pf.points[idx].x, pg.points[idx].x});
    }
    return table;
}

PreimageCurve trace_curve(const ToyModel& model, const BranchWord& word,
                          const std::vector<double>& w_grid) {
    PreimageCurve curve;
    curve.word = word;
    curve.samples.reserve(w_grid.size());
    for (double w : w_grid) {
        const ChainResult chain = pullback_chain(model, word, w);
        curve.samples.push_back({w, chain.x, chain.fell_back});
    }
    return curve;
}

double pl_conjugacy(const ConjugacyTable& table, const SignedCoordinate& x) {
    if (x.is_zero()) return 0.0;

    // Node list in x: the double zero collapses to one node at 0 -> 0.
    std::vector<std::pair<double, double>> nodes;
    nodes.reserve(table.pairs.size());
    for (const ConjugacyPair& pair : table.pairs) {
        const double xf = pair.x_F.value;
        const double xg = pair.x_G.value;
        if (!nodes.empty() && nodes.back().first == xf) continue;
        nodes.push_back({xf, xg});
    }

    const double t = x.value;
    if (t <= nodes.front().first) return nodes.front().second;
    if (t >= nodes.back().first) return nodes.back().second;
    auto hi = std::upper_bound(nodes.begin(), nodes.end(), t,
                               [](double v, const std::pair<double, double>& node) {
                                   return v < node.first;
                               });
    auto lo = hi - 1;
    if (t == lo->first) return lo->second;  // exact on nodes
    const double span = hi->first - lo->first;
    const double frac = (t - lo->first) / span;
    return lo->second + frac * (hi->second - lo->second);
}

double pl_conjugacy(const ToyModel& F, const ToyModel& G, double y, std::size_t n,
                    const SignedCoordinate& x, std::size_t psi_depth) {
    return pl_conjugacy(build_Hn(F, G, y, n, psi_depth), x);
}

double convergence_estimate(const ToyModel& F, const ToyModel& G, std::size_t n, std::size_t m,
                            const std::vector<double>& x_grid, const std::vector<double>& y_grid,
                            std::size_t psi_depth) {
    double sup = 0.0;
    for (double y : y_grid) {
        const ConjugacyTable tn = build_Hn(F, G, y, n, psi_depth);
        const ConjugacyTable tm = build_Hn(F, G, y, m, psi_depth);
        for (double x : x_grid) {
            SignedCoordinate c = x == 0.0 ? SignedCoordinate::zero(Branch::plus)
                                          : SignedCoordinate::regular(x);
            sup = std::max(sup, std::fabs(pl_conjugacy(tn, c) - pl_conjugacy(tm, c)));
        }
    }
    return sup;
}

namespace {

// x-projection of the preimage set (markers dropped, zeros collapse to 0).
std::vector<double> x_projection(const FiberPartition& part) {
    std::vector<double> xs;
    xs.reserve(part.points.size());
    for (const LabeledPreimage& p : part.points)
        if (p.label.kind != PointLabel::Kind::boundary) xs.push_back(p.x.value);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

double one_sided_hausdorff(const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double v : from) {
        auto hi = std::lower_bound(to.begin(), to.end(), v);
        double best = std::numeric_limits<double>::infinity();
        if (hi != to.end()) best = std::min(best, *hi - v);
        if (hi != to.begin()) best = std::min(best, v - *(hi - 1));
        worst = std::max(worst, best);
    }
    return worst;
}

double hausdorff(const std::vector<double>& lhs, const std::vector<double>& rhs) {
    return std::max(one_sided_hausdorff(lhs, rhs), one_sided_hausdorff(rhs, lhs));
}

}  // namespace

std::vector<ModulusRow> equicontinuity_modulus(const ToyModel& model, std::size_t n_max,
                                               const std::vector<double>& delta_grid,
                                               const std::vector<double>& y_grid) {
    // projections[yi][n-1]
    std::vector<std::vector<std::vector<double>>> projections(y_grid.size());
    for (std::size_t yi = 0; yi < y_grid.size(); ++yi) {
        projections[yi].reserve(n_max);
        for (std::size_t n = 1; n <= n_max; ++n)
            projections[yi].push_back(x_projection(preimage_set(model, y_grid[yi], n)));
    }

    std::vector<ModulusRow> rows;
    rows.reserve(delta_grid.size());
    for (double delta : delta_grid) {
        double modulus = 0.0;
        for (std::size_t i = 0; i < y_grid.size(); ++i) {
            for (std::size_t j = i + 1; j < y_grid.size(); ++j) {
                if (std::fabs(y_grid[j] - y_grid[i]) > delta) continue;
                for (std::size_t n = 0; n < n_max; ++n)
                    modulus = std::max(modulus, hausdorff(projections[i][n], projections[j][n]));
            }
        }
        rows.push_back({delta, modulus});
    }
    return rows;
}

std::vector<GapRow> density_report(const ToyModel& model, double y,
                                   const std::vector<std::size_t>& n_list) {
    std::vector<GapRow> rows;
    rows.reserve(n_list.size());
    for (std::size_t n : n_list) {
        const FiberPartition part = preimage_set(model, y, n);
        double gap = 0.0;
        for (std::size_t i = 0; i + 1 < part.points.size(); ++i)
            gap = std::max(gap, part.points[i + 1].x.value - part.points[i].x.value);
        rows.push_back({n, gap});
    }
    return rows;
}

}  // namespace kneadlab
